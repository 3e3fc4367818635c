#pragma once

/**
 * @file circle_map.hpp
 * @brief Lifts of orientation-preserving circle maps: strictly increasing
 *        maps R -> R commuting with x -> x+1.
 *
 * Kinds:
 *  - rigid translation x -> x + c;
 *  - Moebius: a real 2x2 matrix with positive determinant acting on the
 *    circle R/Z through the boundary chart p(x) = tan(pi(x - 1/2)) of the
 *    upper half-plane, together with an integer winding selecting the lift.
 *    The canonical lift (winding 0) has value in [0,1) at x = 0;
 *  - smooth closure: x -> x + d(x) for a 1-periodic displacement given by a
 *    finite Fourier series, rejected unless 1 + d' > 0;
 *  - composite: composition of lifts, composite({f,g,h}) = f.g.h (rightmost
 *    applied first);
 *  - cover lift: x -> f(n x)/n, which commutes with x -> x + 1/n;
 *  - generic inverse (monotone bisection), used where no closed form exists.
 */

#include <memory>
#include <string>
#include <vector>

namespace folcalc {

struct Mat2 {
    double a = 1, b = 0, c = 0, d = 1;
    double det() const { return a * d - b * c; }
};

struct SmoothDisplacement {
    double c0 = 0;                   // constant term
    std::vector<double> sin_coeffs;  // coefficient of sin(2 pi k x), k = 1..
    std::vector<double> cos_coeffs;  // coefficient of cos(2 pi k x), k = 1..

    double value(double x) const;
    double derivative(double x) const;
};

enum class MapKind { rigid, mobius, smooth, composite, cover_lift, inverse };

class LiftedCircleMap {
public:
    LiftedCircleMap();  // identity (rigid 0)

    static LiftedCircleMap rigid(double c);
    /// Throws std::invalid_argument if det <= 0.
    static LiftedCircleMap mobius(const Mat2& m, int winding = 0);
    /// Throws std::invalid_argument unless 1 + d' > 0 on a fine grid.
    static LiftedCircleMap smooth(const SmoothDisplacement& d);
    static LiftedCircleMap compose(std::vector<LiftedCircleMap> maps);
    static LiftedCircleMap cover_lift(const LiftedCircleMap& base, long long n);

    double operator()(double x) const;
    LiftedCircleMap inverse() const;

    MapKind kind() const;
    bool is_rigid() const;
    double rigid_translation() const;  // valid for rigid kind

    // structural accessors for serialization
    const Mat2& mobius_matrix() const;
    int mobius_winding() const;
    const SmoothDisplacement& smooth_displacement() const;
    const std::vector<LiftedCircleMap>& composite_parts() const;
    const LiftedCircleMap& cover_base() const;
    long long cover_degree() const;

    struct Node;

private:
    explicit LiftedCircleMap(std::shared_ptr<const Node> n);
    std::shared_ptr<const Node> node_;
};

/// max over a sample grid of |f(x+1) - f(x) - 1|; the lift law self-check.
double lift_law_deviation(const LiftedCircleMap& f, int grid = 1000);

/// Throws std::runtime_error if the map fails periodicity or monotonicity
/// spot checks on a coarse grid.
void check_lift_validity(const LiftedCircleMap& f);

}  // namespace folcalc
