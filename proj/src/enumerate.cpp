#include <folcalc/enumerate.hpp>

#include <algorithm>
#include <numeric>

namespace folcalc {

std::vector<Rational> slope_universe(long long max_denominator) {
    std::vector<Rational> out;
    for (long long q = 2; q <= max_denominator; ++q)
        for (long long p = 1; p < q; ++p)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void emit_multisets(const std::vector<Rational>& universe, int depth, size_t start,
                    std::vector<Rational>& current, long long b,
                    const EnumerationBounds& bounds,
                    const std::function<void(const SeifertInvariants&)>& emit) {
    if (depth == 0) {
        SeifertInvariants inv;
        inv.genus = 0;
        inv.b = b;
        inv.slopes = current;
        inv.normalized = true;
        if (bounds.orbifold_filter && base_orbifold_type(inv) != *bounds.orbifold_filter) return;
        emit(inv);
        return;
    }
    for (size_t i = start; i < universe.size(); ++i) {
        current.push_back(universe[i]);
        emit_multisets(universe, depth - 1, i, current, b, bounds, emit);
        current.pop_back();
    }
}

}  // namespace

void enumerate_seifert(const EnumerationBounds& bounds,
                       const std::function<void(const SeifertInvariants&)>& emit) {
    const std::vector<Rational> universe = slope_universe(bounds.max_denominator);
    std::vector<Rational> current;
    for (long long b = bounds.b_min; b <= bounds.b_max; ++b)
        emit_multisets(universe, bounds.fiber_count, 0, current, b, bounds, emit);
}

std::vector<SeifertInvariants> enumerate_seifert(const EnumerationBounds& bounds) {
    std::vector<SeifertInvariants> out;
    enumerate_seifert(bounds, [&](const SeifertInvariants& inv) { out.push_back(inv); });
    return out;
}

}  // namespace folcalc
