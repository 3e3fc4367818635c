#pragma once

/**
 * @file enumerate.hpp
 * @brief Canonical enumeration of normalized Seifert invariant tuples,
 *        the driver for the exhaustive consistency sweeps.
 */

#include <folcalc/seifert.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace folcalc {

struct EnumerationBounds {
    long long max_denominator = 2;
    long long b_min = 0;
    long long b_max = 0;
    int fiber_count = 3;
    std::optional<OrbifoldType> orbifold_filter;
};

/// All slopes p/q in lowest terms with 0 < p < q <= max_denominator, sorted.
std::vector<Rational> slope_universe(long long max_denominator);

/// Emits every normalized tuple in range exactly once, in canonical order:
/// b ascending, then slope multisets in lexicographic order.
void enumerate_seifert(const EnumerationBounds& bounds,
                       const std::function<void(const SeifertInvariants&)>& emit);

std::vector<SeifertInvariants> enumerate_seifert(const EnumerationBounds& bounds);

}  // namespace folcalc
