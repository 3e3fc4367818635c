#pragma once

/**
 * @file existence.hpp
 * @brief Existence criteria for horizontal foliations and horizontal contact
 *        structures on Seifert fibered spaces, all decided in exact rational
 *        arithmetic, plus the four-way consistency cross-check on small
 *        Seifert spaces.
 */

#include <folcalc/seifert.hpp>

#include <optional>
#include <string>

namespace folcalc {

enum class Verdict { yes, no, unknown };

std::string to_string(Verdict v);

/// Certificate for the genus-zero realizability clause: coprime integers
/// 0 < a < m with slope[role0] > (m-a)/m, slope[role1] > a/m and every other
/// slope > (m-1)/m.  role_indices refer to the sorted slope list that was
/// searched (the two smallest slopes take the a-roles, which is no loss of
/// generality: swapping them is a <-> m-a, and any witness for an unsorted
/// assignment yields one for the sorted assignment with the same m).
struct RealizabilityWitness {
    long long a = 0;
    long long m = 0;
    size_t role_indices[2] = {0, 1};
};

struct Decision {
    Verdict verdict = Verdict::unknown;
    std::string rule;  // clause identifier that fired (or failed last)
    std::optional<RealizabilityWitness> witness;

    bool yes() const { return verdict == Verdict::yes; }
};

/// Witness search over sorted slopes in (0,1); requires >= 3 slopes.
/// m ranges over 2 <= m < min_{i>=2} den_i/(den_i - num_i), exactly.
std::optional<RealizabilityWitness> search_realizability_witness(
    const std::vector<Rational>& sorted_slopes);

/// Existence of a horizontal foliation with holonomy in PSL(2,R).
/// g > 0: yes iff 2-2g-r <= -b-r <= 2g-2 (the bound is sharp there).
/// g = 0, r >= 3: yes iff 2-r <= -b-r <= -2, or b = -1 with sum(slopes) <= 1,
/// or b = 1-r with sum(slopes) >= r-1.  With strict_sum the two sum
/// comparisons become strict.
/// g = 0, r <= 2: unknown (outside the criterion's applicability).
Decision has_psl2r_horizontal_foliation(const SeifertInvariants& inv, bool strict_sum = false);

/// Existence of a positive contact structure transverse to the fibers:
/// (1) -b-r <= 2g-2; or (2) g = 0, r <= 2 and -b-sum(slopes) < 0; or
/// (3) g = 0, r >= 3, b = 1-r and a realizability witness exists.
/// The b = 1-r gate on clause (3) is forced: a transverse contact structure
/// with twisting -n has a defining 1-form whose index sum is
/// nb + sum(ceil(n s_i)) = 2-2g, which at g = 0 pins b.
Decision has_horizontal_contact(const SeifertInvariants& inv);

/// Realizability of the invariants, equivalent to the existence of a
/// horizontal foliation with arbitrary holonomy for g = 0.  Orientation
/// symmetric: witness search on the slopes when b = 1-r, on the reversed
/// slopes 1-s when b = -1, no otherwise.  Requires g = 0 and r >= 3.
Decision is_realizable(const SeifertInvariants& inv);

struct ConsistencyReport {
    SeifertInvariants invariants;
    SeifertInvariants reversed;
    OrbifoldType orbifold = OrbifoldType::hyperbolic;
    Decision contact_plus;    // horizontal contact, given orientation
    Decision contact_minus;   // horizontal contact, opposite orientation
    Decision realizable;
    bool pass = false;        // (C+ and C-) <=> realizable
};

/// Cross-check of the equivalence "horizontal contact in both orientations
/// <=> realizable" on small Seifert spaces (g = 0, r = 3).  The equivalence
/// is the content of the criterion for infinite fundamental group, i.e.
/// hyperbolic (or euclidean) base; the report carries the orbifold type.
ConsistencyReport cross_check_existence(const SeifertInvariants& inv);

}  // namespace folcalc
