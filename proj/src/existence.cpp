#include <folcalc/existence.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>

namespace folcalc {

namespace {

Rational slope_sum(const SeifertInvariants& inv) {
    Rational s;
    for (const Rational& t : inv.slopes) s += t;
    return s;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "unknown";
    }
}

std::optional<RealizabilityWitness> search_realizability_witness(
    const std::vector<Rational>& slopes) {
    if (slopes.size() < 3)
        throw std::invalid_argument("search_realizability_witness: need at least 3 slopes");

    const Rational& s0 = slopes[0];
    const Rational& s1 = slopes[1];
    // quick reject: a/m must lie strictly between m(1-s0)/m and s1
    if (s0 + s1 <= Rational(1)) return std::nullopt;

    for (long long m = 2;; ++m) {
        // every non-role slope s must satisfy s > (m-1)/m, i.e. m(den-num) < den
        bool in_range = true;
        for (size_t i = 2; i < slopes.size(); ++i) {
            const Rational& s = slopes[i];
            const BigInt gap = s.den() - s.num();
            if (Rational(m) * Rational(gap) >= Rational(s.den())) {
                in_range = false;
                break;
            }
        }
        if (!in_range) break;

        // a strictly between m(1-s0) and m*s1
        BigInt lo = (Rational(m) * (Rational(1) - s0)).floor() + 1;
        BigInt hi = (Rational(m) * s1).ceil() - 1;
        long long a_lo = std::max<long long>(1, lo.convert_to<long long>());
        long long a_hi = std::min<long long>(m - 1, hi.convert_to<long long>());
        for (long long a = a_lo; a <= a_hi; ++a) {
            if (gcd_ll(a, m) != 1) continue;
            if (s0 * Rational(m) > Rational(m - a) && s1 * Rational(m) > Rational(a)) {
                RealizabilityWitness w;
                w.a = a;
                w.m = m;
                return w;
            }
        }
    }
    return std::nullopt;
}

Decision has_psl2r_horizontal_foliation(const SeifertInvariants& inv, bool strict_sum) {
    require_normalized(inv, "has_psl2r_horizontal_foliation");
    const long long g = inv.genus;
    const long long r = inv.fiber_count();
    Decision d;

    if (g > 0) {
        const long long lhs = -inv.b - r;
        if (2 - 2 * g - r <= lhs && lhs <= 2 * g - 2) {
            d.verdict = Verdict::yes;
            d.rule = "psl2r_foliation.double_inequality";
        } else {
            d.verdict = Verdict::no;
            d.rule = "psl2r_foliation.double_inequality";
        }
        return d;
    }

    if (r <= 2) {
        d.verdict = Verdict::unknown;
        d.rule = "genus_zero_foliation.not_applicable";
        return d;
    }

    const long long mid = -inv.b - r;
    if (2 - r <= mid && mid <= -2) {
        d.verdict = Verdict::yes;
        d.rule = "genus_zero_foliation.central_band";
        return d;
    }
    const Rational sum = slope_sum(inv);
    if (inv.b == -1 && (strict_sum ? sum < Rational(1) : sum <= Rational(1))) {
        d.verdict = Verdict::yes;
        d.rule = "genus_zero_foliation.sum_low";
        return d;
    }
    if (inv.b == 1 - r &&
        (strict_sum ? sum > Rational(r - 1) : sum >= Rational(r - 1))) {
        d.verdict = Verdict::yes;
        d.rule = "genus_zero_foliation.sum_high";
        return d;
    }
    d.verdict = Verdict::no;
    d.rule = "genus_zero_foliation";
    return d;
}

Decision has_horizontal_contact(const SeifertInvariants& inv) {
    require_normalized(inv, "has_horizontal_contact");
    const long long g = inv.genus;
    const long long r = inv.fiber_count();
    Decision d;

    if (-inv.b - r <= 2 * g - 2) {
        d.verdict = Verdict::yes;
        d.rule = "transverse_contact.genus_bound";
        return d;
    }
    if (g == 0 && r <= 2) {
        if ((-Rational(inv.b) - slope_sum(inv)).sign() < 0) {
            d.verdict = Verdict::yes;
            d.rule = "transverse_contact.small_base";
            return d;
        }
        d.verdict = Verdict::no;
        d.rule = "transverse_contact";
        return d;
    }
    if (g == 0 && r >= 3 && inv.b == 1 - r) {
        if (auto w = search_realizability_witness(inv.slopes)) {
            d.verdict = Verdict::yes;
            d.rule = "transverse_contact.witness";
            d.witness = w;
            return d;
        }
    }
    d.verdict = Verdict::no;
    d.rule = "transverse_contact";
    return d;
}

Decision is_realizable(const SeifertInvariants& inv) {
    require_normalized(inv, "is_realizable");
    if (inv.genus != 0)
        throw std::invalid_argument("is_realizable: criterion applies to genus 0 only");
    const long long r = inv.fiber_count();
    if (r <= 2)
        throw std::invalid_argument("is_realizable: criterion applies to r >= 3 only");

    Decision d;
    if (inv.b == 1 - r) {
        if (auto w = search_realizability_witness(inv.slopes)) {
            d.verdict = Verdict::yes;
            d.rule = "realizable.direct";
            d.witness = w;
            return d;
        }
    }
    if (inv.b == -1) {
        if (auto w = search_realizability_witness(reverse_orientation(inv).slopes)) {
            d.verdict = Verdict::yes;
            d.rule = "realizable.reversed";
            d.witness = w;
            return d;
        }
    }
    d.verdict = Verdict::no;
    d.rule = "realizable";
    return d;
}

ConsistencyReport cross_check_existence(const SeifertInvariants& inv) {
    require_normalized(inv, "cross_check_existence");
    if (inv.genus != 0 || inv.fiber_count() != 3)
        throw std::invalid_argument("cross_check_existence: requires g = 0 and r = 3");

    ConsistencyReport rep;
    rep.orbifold = base_orbifold_type(inv);
    rep.invariants = inv;
    rep.reversed = reverse_orientation(inv);
    rep.contact_plus = has_horizontal_contact(inv);
    rep.contact_minus = has_horizontal_contact(rep.reversed);
    rep.realizable = is_realizable(inv);
    rep.pass = (rep.contact_plus.yes() && rep.contact_minus.yes()) == rep.realizable.yes();
    return rep;
}

}  // namespace folcalc
