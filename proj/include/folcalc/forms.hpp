#pragma once

/**
 * @file forms.hpp
 * @brief 1-forms P dx + Q dy + R dz on a box with periodic horizontal
 *        coordinates, carrying analytic partial derivatives; wedge products,
 *        the linear-deformation pairing, model constructions and grid
 *        classification into foliation / confoliation / contact.
 */

#include <functional>
#include <string>

namespace folcalc {

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

/// Scalar field with its three analytic partials.
struct ScalarField {
    std::function<double(const Vec3&)> value;
    std::function<double(const Vec3&)> dx;
    std::function<double(const Vec3&)> dy;
    std::function<double(const Vec3&)> dz;

    static ScalarField constant(double c);
};

/// Domain [0,1]_x x [0,1]_y x [z0,z1], periodic in x and y.
struct BoxDomain {
    double z0 = 0, z1 = 1;
    bool contains(const Vec3& p) const { return p.z >= z0 - 1e-12 && p.z <= z1 + 1e-12; }
};

struct OneFormField {
    ScalarField P, Q, R;
    BoxDomain domain;
    std::string name;
};

/// Coefficient of alpha ^ d(alpha) against dx^dy^dz:
///   P(dR/dy - dQ/dz) + Q(dP/dz - dR/dx) + R(dQ/dx - dP/dy).
/// Throws std::invalid_argument for points outside the domain.
double wedge_self(const OneFormField& alpha, const Vec3& p);

/// Coefficient of alpha ^ d(beta) + beta ^ d(alpha); symmetric in its
/// arguments as an algebraic identity.  Throws on domain mismatch.
double pairing(const OneFormField& alpha, const OneFormField& beta, const Vec3& p);

/// g * alpha with product-rule partials.
OneFormField scale(const OneFormField& alpha, const ScalarField& g, const std::string& name = "");

enum class FormClass { foliation, positive_contact, positive_confoliation, indefinite };

std::string to_string(FormClass c);

struct ClassifyResult {
    FormClass cls = FormClass::indefinite;
    double min = 0, max = 0;
    Vec3 argmin, argmax;
    long long points = 0;
};

/// Evaluates wedge_self on a grid of `resolution` points per axis (x and y
/// periodic-exclusive, z including endpoints) and classifies by sign:
/// all |v| < tol -> foliation; all v > tol -> positive_contact; all
/// v > -tol with some v > tol -> positive_confoliation; else indefinite.
/// A falsifier, not a prover: certifies sign conditions at sampled points
/// only.  Requires resolution >= 16.
ClassifyResult classify(const OneFormField& alpha, int resolution, double tol);

// -------- smooth profile building blocks --------

/// exp(-1/t)-based smooth step: 0 for t <= 0, 1 for t >= 1, strictly
/// increasing in between, flat to infinite order at both ends.
double smooth_step(double t);
double smooth_step_deriv(double t);

// -------- model constructions --------

/// gamma(z) dx + (1 - gamma(z)) dz on z in [0.05, 1]; gamma decreasing from
/// 1 to 0, flat at the endpoints.  The radial coordinate of a solid-torus
/// foliation chart; the coordinate core r < 0.05 is excised (the form is
/// radial and the core is foliated trivially).  Integrable by construction.
OneFormField build_reeb();

/// rho(-z) alpha_- + rho(z) alpha_+ + (1 - rho(|z|)) dz on z in [-1, 1] with
/// constant boundary forms alpha_- = am dx + bm dy, alpha_+ = ap dx + bp dy;
/// rho is 0 on z <= 1/4 and 1 on z >= 3/4.  Spins the boundary foliations
/// into a stack of torus leaves; a foliation for any boundary slopes.
OneFormField build_spiral(double am, double bm, double ap, double bp);

/// dz + t (cos(f(z)) dx - sin(f(z)) dy) on z in [-1, 1]; f non-decreasing,
/// equal to theta_minus for z <= -1/4 and theta_plus for z >= 1/4 with
/// positive derivative in between; requires -pi < theta_minus < theta_plus < 0.
/// wedge_self equals t^2 f'(z) identically.
OneFormField build_deformation(double t, double theta_minus = -2.0943951023931953,
                               double theta_plus = -0.5235987755982988);

/// cos(2 pi n y) lambda + sin(2 pi n y) (lambda . J) for the constant
/// annulus form lambda = c1 dx + c2 dz and the quarter-turn J; the fiber
/// coordinate is y.  Positive contact with constant wedge 2 pi n (c1^2+c2^2).
OneFormField build_normal_form(int n, double c1, double c2);

// -------- self tests --------

/// max over `points` pseudo-random points of the worst deviation between the
/// supplied partials and central finite differences with step h.
double derivative_selftest(const OneFormField& alpha, int points, unsigned seed = 1,
                           double h = 1e-5);

/// min over the grid of P^2 + Q^2 + R^2 (non-vanishing check).
double min_coefficient_norm2(const OneFormField& alpha, int resolution);

}  // namespace folcalc
