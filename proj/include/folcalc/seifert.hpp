#pragma once

/**
 * @file seifert.hpp
 * @brief Seifert invariant calculus: normal form, orientation reversal,
 *        rational Euler number and base-orbifold classification.
 *
 * A Seifert fibered space over an orientable base is encoded by the base
 * genus g, the integer section class b and the exceptional-fiber slopes
 * beta_i/alpha_i.  The normal form has every slope strictly between 0 and 1
 * and the slope list sorted non-decreasingly; the quantity b + sum(slopes)
 * is the normalization invariant.
 */

#include <folcalc/rational.hpp>

#include <string>
#include <vector>

namespace folcalc {

struct SeifertInvariants {
    long long genus = 0;            // base genus, >= 0
    long long b = 0;                // integer section class
    std::vector<Rational> slopes;   // exceptional-fiber slopes beta_i/alpha_i
    bool normalized = false;

    long long fiber_count() const { return static_cast<long long>(slopes.size()); }
};

/// Equality of invariant tuples.  Equivalence of the underlying manifolds is
/// decided at this level only; the finitely many Seifert spaces whose normal
/// form is non-unique are not special-cased.
bool operator==(const SeifertInvariants& a, const SeifertInvariants& b);
inline bool operator!=(const SeifertInvariants& a, const SeifertInvariants& b) { return !(a == b); }

/// Normal form: fractional parts of the slopes (integer parts absorbed into
/// b, slopes that become 0 dropped), sorted non-decreasingly.  Preserves
/// b + sum(slopes); idempotent.
SeifertInvariants normalize(const SeifertInvariants& raw);

/// Invariants of the oppositely oriented manifold: b -> -b-r, slope -> 1-slope.
/// Requires normalized input; the result is normalized.
SeifertInvariants reverse_orientation(const SeifertInvariants& inv);

/// Rational Euler number e(M) = -(b + sum slopes).  Invariant under
/// normalization moves.
Rational euler_number(const SeifertInvariants& inv);

enum class OrbifoldType { spherical, euclidean, hyperbolic };

/// chi^orb = 2 - 2g - sum(1 - 1/alpha_i), exact.
Rational orbifold_euler_characteristic(const SeifertInvariants& inv);

/// Sign classification of chi^orb.  Requires normalized input.
OrbifoldType base_orbifold_type(const SeifertInvariants& inv);

std::string to_string(OrbifoldType t);

/// Throws std::invalid_argument unless inv.normalized and the slope list
/// actually satisfies the normal-form constraints.
void require_normalized(const SeifertInvariants& inv, const char* where);

}  // namespace folcalc
