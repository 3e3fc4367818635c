#pragma once

/**
 * @file covers.hpp
 * @brief Fiberwise branched covers, twisting-number candidate enumeration,
 *        the Brieskorn-family analysis and representation-space component
 *        lower bounds.
 */

#include <folcalc/seifert.hpp>

#include <map>
#include <optional>
#include <vector>

namespace folcalc {

struct BranchedCoverResult {
    SeifertInvariants quotient;             // unnormalized: (g, n*b, [n*s_i])
    std::vector<long long> branch_orders;   // gcd(n, alpha_i), one per fiber
    long long degree = 1;
};

/// Quotient of the n-fold fiberwise branched cover.  Requires normalized
/// input and n >= 1.  The quotient is left unnormalized (callers normalize).
BranchedCoverResult fiberwise_branched_cover(const SeifertInvariants& inv, long long n);

/// All n in [1, n_max] with n*b + sum(ceil(n*s_i)) = 2-2g, exact ceilings.
/// Candidates for -n being the twisting number of a horizontal contact
/// structure; a necessary condition only, never an existence certificate.
std::vector<long long> twisting_candidates(const SeifertInvariants& inv, long long n_max);

struct BrieskornReport {
    long long k = 0;
    SeifertInvariants invariants;  // (0, -2, [1/2, 2/3, (5k-1)/(6k-1)])
    std::optional<long long> vertical_twisting;        // -(6k-7), only for k > 1
    std::vector<long long> candidates;                 // solutions in [1, n_max]
    std::map<long long, SeifertInvariants> covers;     // n -> normalized quotient
    std::vector<long long> coprime_candidates;         // gcd(n, 6k-7) = 1
    int class_lower_bound = 1;     // certified deformation classes of taut foliations
    int heuristic_bound = 1;       // |coprime_candidates| + 1, rests on external classification
    bool necessary_only = true;    // candidates are necessary-condition solutions
    long long n_max = 0;
};

/// Analysis of the family with invariants (0, -2, [1/2, 2/3, (5k-1)/(6k-1)]).
/// Asserts the candidate set is {6l-1 : 1 <= l <= k-1} and that the
/// normalized (6l-1)-fold cover equals (0, -1, [1/2, 1/3, (k-l)/(6k-1)]);
/// a violation throws std::logic_error (it would be an implementation bug).
/// n_max = 0 selects the default 12k.  Requires k >= 1 and n_max >= 6k.
BrieskornReport brieskorn_report(long long k, long long n_max = 0);

/// Lower bound n^(2g) + 1 for the number of path components of the
/// representation space with Euler class e, where n = (2g-2)/e.
/// Requires g >= 2, e != 0 and e | 2g-2.
BigInt component_lower_bound(long long g, long long e);

}  // namespace folcalc
