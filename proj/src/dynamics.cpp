#include <folcalc/dynamics.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace folcalc {

TranslationEstimate translation_number_iterative(const LiftedCircleMap& f, long long iterations) {
    if (iterations < 1) throw std::invalid_argument("translation_number: iterations must be >= 1");
    check_lift_validity(f);
    double y = 0.0;
    for (long long i = 0; i < iterations; ++i) y = f(y);
    return {y / static_cast<double>(iterations), 1.0 / static_cast<double>(iterations), false};
}

TranslationEstimate translation_number(const LiftedCircleMap& f, long long iterations) {
    if (f.is_rigid()) return {f.rigid_translation(), 0.0, true};
    return translation_number_iterative(f, iterations);
}

TranslationEstimate rotation_number(const LiftedCircleMap& f, long long iterations) {
    TranslationEstimate t = translation_number(f, iterations);
    double r = t.estimate - std::floor(t.estimate);
    if (r >= 1.0) r = 0.0;
    return {r, t.error_bound, t.exact};
}

double circle_distance(double a, double b) {
    double d = std::fabs(a - b);
    d -= std::floor(d);
    return std::min(d, 1.0 - d);
}

std::pair<long long, long long> finite_orbit_rotation(const LiftedCircleMap& f, long long order,
                                                      double tol) {
    if (order < 1) throw std::invalid_argument("finite_orbit_rotation: order must be >= 1");
    const long long q = order;

    // winding of the orbit of 0: the q-th iterate of a finite-order map is an
    // integer translation, and the integer is the winding p with tr = p/q
    std::vector<double> orbit;
    double y = 0.0;
    for (long long i = 0; i < q; ++i) {
        orbit.push_back(y - std::floor(y));
        y = f(y);
    }
    const double p_raw = y;
    const long long p = std::llround(p_raw);
    if (std::fabs(p_raw - static_cast<double>(p)) > tol)
        throw std::runtime_error("finite_orbit_rotation: orbit of the stated order does not close");

    // cross-check against the cyclic order when the orbit points are distinct:
    // the circle map shifts the sorted rank by p mod q
    std::vector<size_t> idx(orbit.size());
    std::iota(idx.begin(), idx.end(), size_t{0});
    std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) { return orbit[i] < orbit[j]; });
    bool distinct = true;
    for (size_t r = 1; r < idx.size(); ++r)
        if (orbit[idx[r]] - orbit[idx[r - 1]] <= tol) distinct = false;
    if (distinct && q > 1) {
        std::vector<long long> rank_of(orbit.size());
        for (size_t r = 0; r < idx.size(); ++r) rank_of[idx[r]] = static_cast<long long>(r);
        const long long shift = ((rank_of[1] - rank_of[0]) % q + q) % q;
        if (shift != ((p % q) + q) % q)
            throw std::runtime_error("finite_orbit_rotation: cyclic order inconsistent with winding");
    }
    return {p, q};
}

TranslationEstimate matsumoto_defect(const LiftedCircleMap& f, const LiftedCircleMap& g,
                                     long long iterations) {
    // tr is additive on commuting translations, so the defect of two rigid
    // maps vanishes identically
    if (f.is_rigid() && g.is_rigid()) return {0.0, 0.0, true};
    const LiftedCircleMap fg = LiftedCircleMap::compose({f, g});
    const TranslationEstimate a = translation_number(fg, iterations);
    const TranslationEstimate b = translation_number(f, iterations);
    const TranslationEstimate c = translation_number(g, iterations);
    const bool exact = a.exact && b.exact && c.exact;
    return {a.estimate - b.estimate - c.estimate,
            exact ? 0.0 : 3.0 / static_cast<double>(iterations), exact};
}

LiftedCircleMap relation_product(const SurfaceGroupRep& rep) {
    std::vector<LiftedCircleMap> chain;
    for (long long i = 0; i < rep.genus; ++i) {
        const LiftedCircleMap& a = rep.generators[2 * i];
        const LiftedCircleMap& b = rep.generators[2 * i + 1];
        chain.push_back(a);
        chain.push_back(b);
        chain.push_back(a.inverse());
        chain.push_back(b.inverse());
    }
    return LiftedCircleMap::compose(std::move(chain));
}

double relation_residual(const SurfaceGroupRep& rep, int samples) {
    const LiftedCircleMap P = relation_product(rep);
    const double e = std::round(P(0.0));
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
        const double x = static_cast<double>(i) / samples;
        worst = std::max(worst, std::fabs(P(x) - x - e));
    }
    return worst;
}

long long euler_class(const SurfaceGroupRep& rep, int samples) {
    if (rep.generators.size() != static_cast<size_t>(2 * rep.genus))
        throw std::invalid_argument("euler_class: generator count must be 2g");
    if (!(relation_residual(rep, samples) < 1e-6))
        throw std::runtime_error("euler_class: not a representation (relation residual too large)");

    const LiftedCircleMap P = relation_product(rep);
    double lo = P(0.0), hi = lo;
    for (int i = 1; i < samples; ++i) {
        const double x = static_cast<double>(i) / samples;
        const double d = P(x) - x;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    if (hi - lo > 1e-6)
        throw std::runtime_error("euler_class: commutator displacement not constant");
    const double mid = 0.5 * (lo + hi);
    const double e = std::round(mid);
    if (std::fabs(mid - e) > 1e-3)
        throw std::runtime_error("euler_class: displacement not an integer");
    return static_cast<long long>(e);
}

SurfaceGroupRep conjugate_representation(const SurfaceGroupRep& rep, const LiftedCircleMap& h) {
    SurfaceGroupRep out;
    out.genus = rep.genus;
    const LiftedCircleMap hinv = h.inverse();
    for (const LiftedCircleMap& g : rep.generators)
        out.generators.push_back(LiftedCircleMap::compose({h, g, hinv}));
    out.relation_residual = relation_residual(out);
    return out;
}

LiftedCircleMap word_map(const SurfaceGroupRep& rep, const std::vector<int>& word) {
    std::vector<LiftedCircleMap> chain;
    for (int letter : word) {
        if (letter == 0 || std::abs(letter) > static_cast<int>(rep.generators.size()))
            throw std::invalid_argument("word_map: letter out of range");
        const LiftedCircleMap& g = rep.generators[std::abs(letter) - 1];
        chain.push_back(letter > 0 ? g : g.inverse());
    }
    return LiftedCircleMap::compose(std::move(chain));
}

std::vector<std::vector<int>> default_word_list(long long genus) {
    std::vector<std::vector<int>> words;
    for (int i = 0; i < genus; ++i) {
        const int a = 2 * i + 1, b = 2 * i + 2;
        words.push_back({a, b});
        words.push_back({a, b, -a, -b});
    }
    if (genus >= 2) {
        words.push_back({1, 3});
        words.push_back({1, 2, 3, 4});
        words.push_back({2, -3});
    }
    return words;
}

StabilityReport stability_experiment(const SurfaceGroupRep& rep, const LiftedCircleMap& h,
                                     long long iterations,
                                     const std::vector<std::vector<int>>& words) {
    if (!(rep.relation_residual < 1e-6) && !(relation_residual(rep) < 1e-6))
        throw std::runtime_error("stability_experiment: not a representation");
    check_lift_validity(h);
    const SurfaceGroupRep conj = conjugate_representation(rep, h);

    StabilityReport report;
    report.threshold = 2.0 / static_cast<double>(iterations);

    auto add = [&](const std::string& label, const LiftedCircleMap& f, const LiftedCircleMap& fc) {
        StabilityItem item;
        item.label = label;
        item.rot_original = rotation_number(f, iterations).estimate;
        item.rot_conjugated = rotation_number(fc, iterations).estimate;
        item.discrepancy = circle_distance(item.rot_original, item.rot_conjugated);
        report.max_discrepancy = std::max(report.max_discrepancy, item.discrepancy);
        report.items.push_back(std::move(item));
    };

    for (size_t i = 0; i < rep.generators.size(); ++i)
        add("gen" + std::to_string(i + 1), rep.generators[i], conj.generators[i]);

    const auto& wl = words.empty() ? default_word_list(rep.genus) : words;
    for (size_t w = 0; w < wl.size(); ++w)
        add("word" + std::to_string(w + 1), word_map(rep, wl[w]), word_map(conj, wl[w]));

    report.pass = report.max_discrepancy <= report.threshold;
    return report;
}

}  // namespace folcalc
