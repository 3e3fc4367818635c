#pragma once

/**
 * @file dynamics.hpp
 * @brief Translation and rotation numbers, surface-group representations by
 *        lifted circle maps, Euler class via commutator products, the
 *        translation-number cocycle defect, and conjugation-stability
 *        experiments.
 */

#include <folcalc/circle_map.hpp>

#include <string>
#include <utility>
#include <vector>

namespace folcalc {

struct TranslationEstimate {
    double estimate = 0;
    double error_bound = 0;
    bool exact = false;
};

/// Translation number tr(f) = lim f^N(0)/N.  The iterative estimate f^N(0)/N
/// carries the deterministic bound 1/N; rigid translations short-circuit to
/// the exact value with bound 0.
TranslationEstimate translation_number(const LiftedCircleMap& f, long long iterations);

/// Iterative estimate with no short-circuit, bound 1/N.
TranslationEstimate translation_number_iterative(const LiftedCircleMap& f, long long iterations);

/// Translation number reduced mod 1 into [0,1); error bound propagated.
TranslationEstimate rotation_number(const LiftedCircleMap& f, long long iterations);

/// Distance on R/Z.
double circle_distance(double a, double b);

/// Rotation number p/q of a map of finite order q, computed combinatorially
/// from the cyclic order of the orbit of 0 (no iteration limit involved).
/// Throws std::runtime_error if the orbit does not close up to `tol`.
std::pair<long long, long long> finite_orbit_rotation(const LiftedCircleMap& f, long long order,
                                                      double tol = 1e-9);

/// tr(f.g) - tr(f) - tr(g), estimated at the given iteration count.
/// The value carries error bound 3/N.
TranslationEstimate matsumoto_defect(const LiftedCircleMap& f, const LiftedCircleMap& g,
                                     long long iterations);

struct SurfaceGroupRep {
    long long genus = 0;
    std::vector<LiftedCircleMap> generators;  // a1, b1, ..., ag, bg (2g maps)
    double relation_residual = 0;             // sup distance of the commutator
                                              // product from an integer translation
};

/// Commutator product [a1,b1]...[ag,bg] as a lifted map.
LiftedCircleMap relation_product(const SurfaceGroupRep& rep);

/// Sup over `samples` points of the distance of the commutator product from
/// the nearest integer translation.
double relation_residual(const SurfaceGroupRep& rep, int samples = 64);

/// Side-pairing generators of the regular hyperbolic 4g-gon with vertex
/// angle 2 pi / 4g; all generators hyperbolic, relation residual at the
/// 1e-9 scale, Euler class +-(2g-2).  Requires g >= 2.
SurfaceGroupRep fuchsian_generators(long long g);

/// The integer e with [a1,b1]...[ag,bg] = translation by e.  Evaluates the
/// product at `samples` points; requires the displacement constant to 1e-6
/// and within 1e-3 of an integer, else throws std::runtime_error.  Requires
/// relation_residual(rep) < 1e-6 ("not a representation" otherwise).
long long euler_class(const SurfaceGroupRep& rep, int samples = 64);

/// h . rep . h^{-1}, generator-wise.
SurfaceGroupRep conjugate_representation(const SurfaceGroupRep& rep, const LiftedCircleMap& h);

/// Word in the generators; letter k > 0 means generators[k-1], k < 0 its
/// inverse.
LiftedCircleMap word_map(const SurfaceGroupRep& rep, const std::vector<int>& word);

struct StabilityItem {
    std::string label;
    double rot_original = 0;
    double rot_conjugated = 0;
    double discrepancy = 0;  // circle distance
};

struct StabilityReport {
    std::vector<StabilityItem> items;
    double max_discrepancy = 0;
    double threshold = 0;  // 2/N
    bool pass = false;
};

/// Compares rotation numbers of the 2g generators plus the supplied words
/// under rep and under h.rep.h^{-1}; PASS iff the max circle-distance
/// discrepancy is <= 2/N.
StabilityReport stability_experiment(const SurfaceGroupRep& rep, const LiftedCircleMap& h,
                                     long long iterations,
                                     const std::vector<std::vector<int>>& words = {});

/// Commutator words of the generator pairs and a few short products; the
/// default word list for stability experiments.
std::vector<std::vector<int>> default_word_list(long long genus);

}  // namespace folcalc
