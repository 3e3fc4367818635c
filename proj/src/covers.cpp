#include <folcalc/covers.hpp>

#include <numeric>
#include <stdexcept>
#include <string>

namespace folcalc {

BranchedCoverResult fiberwise_branched_cover(const SeifertInvariants& inv, long long n) {
    require_normalized(inv, "fiberwise_branched_cover");
    if (n < 1) throw std::invalid_argument("fiberwise_branched_cover: degree must be >= 1");

    BranchedCoverResult res;
    res.degree = n;
    res.quotient.genus = inv.genus;
    res.quotient.b = inv.b * n;
    res.quotient.normalized = (n == 1);
    for (const Rational& s : inv.slopes) {
        res.quotient.slopes.push_back(Rational(n) * s);
        const BigInt alpha = s.den();
        res.branch_orders.push_back(
            boost::multiprecision::gcd(BigInt(n), alpha).convert_to<long long>());
    }
    return res;
}

std::vector<long long> twisting_candidates(const SeifertInvariants& inv, long long n_max) {
    require_normalized(inv, "twisting_candidates");
    const Rational target(2 - 2 * inv.genus);
    std::vector<long long> out;
    for (long long n = 1; n <= n_max; ++n) {
        Rational lhs(BigInt(inv.b) * n);
        for (const Rational& s : inv.slopes) lhs += Rational((Rational(n) * s).ceil());
        if (lhs == target) out.push_back(n);
    }
    return out;
}

BrieskornReport brieskorn_report(long long k, long long n_max) {
    if (k < 1) throw std::invalid_argument("brieskorn_report: k must be >= 1");
    if (n_max == 0) n_max = 12 * k;
    if (n_max < 6 * k) throw std::invalid_argument("brieskorn_report: n_max must be >= 6k");

    BrieskornReport rep;
    rep.k = k;
    rep.n_max = n_max;
    rep.invariants.genus = 0;
    rep.invariants.b = -2;
    rep.invariants.slopes = {Rational(1, 2), Rational(2, 3), Rational(5 * k - 1, 6 * k - 1)};
    rep.invariants.normalized = true;
    require_normalized(rep.invariants, "brieskorn_report");

    if (k > 1) rep.vertical_twisting = -(6 * k - 7);

    rep.candidates = twisting_candidates(rep.invariants, n_max);

    std::vector<long long> expected;
    for (long long l = 1; l <= k - 1; ++l) expected.push_back(6 * l - 1);
    if (rep.candidates != expected)
        throw std::logic_error("brieskorn_report: candidate set differs from {6l-1 : l <= k-1}");

    for (long long l = 1; l <= k - 1; ++l) {
        const long long n = 6 * l - 1;
        SeifertInvariants cov = normalize(fiberwise_branched_cover(rep.invariants, n).quotient);
        SeifertInvariants want;
        want.genus = 0;
        want.b = -1;
        want.slopes = {Rational(1, 2), Rational(1, 3), Rational(k - l, 6 * k - 1)};
        want = normalize(want);
        if (cov != want)
            throw std::logic_error("brieskorn_report: cover normalization mismatch at l=" +
                                   std::to_string(l));
        rep.covers[n] = cov;
        if (std::gcd(n, 6 * k - 7) == 1) rep.coprime_candidates.push_back(n);
    }

    rep.class_lower_bound = 1 + (rep.coprime_candidates.empty() ? 0 : 1);
    rep.heuristic_bound = static_cast<int>(rep.coprime_candidates.size()) + 1;
    return rep;
}

BigInt component_lower_bound(long long g, long long e) {
    if (g < 2) throw std::invalid_argument("component_lower_bound: genus must be >= 2");
    if (e == 0) throw std::invalid_argument("component_lower_bound: euler class must be nonzero");
    const long long chi = 2 * g - 2;
    if (chi % e != 0)
        throw std::invalid_argument("component_lower_bound: euler class must divide 2g-2");
    const long long n = chi / e;
    BigInt result = 1;
    for (long long i = 0; i < 2 * g; ++i) result *= n;
    return result + 1;
}

}  // namespace folcalc
