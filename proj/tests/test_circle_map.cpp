#include <folcalc/circle_map.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace folcalc;

namespace {
constexpr double kPi = std::numbers::pi;

LiftedCircleMap rotation_matrix_map(double angle) {
    // acts as x -> x + angle/pi in the boundary chart
    return LiftedCircleMap::mobius({std::cos(angle), std::sin(angle), -std::sin(angle),
                                    std::cos(angle)});
}

LiftedCircleMap random_smooth(std::mt19937& rng, double amplitude = 0.8) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    SmoothDisplacement d;
    d.c0 = 0.4 * unit(rng);
    for (int k = 1; k <= 3; ++k) {
        const double s = amplitude / (2 * kPi * k * 6);
        d.sin_coeffs.push_back(s * unit(rng));
        d.cos_coeffs.push_back(s * unit(rng));
    }
    return LiftedCircleMap::smooth(d);
}

}  // namespace

TEST_CASE("identity and rigid maps") {
    const LiftedCircleMap id;
    for (double x : {-3.7, -0.5, 0.0, 0.25, 0.999, 12.5}) CHECK(std::fabs(id(x) - x) < 1e-14);
    const LiftedCircleMap t = LiftedCircleMap::rigid(0.375);
    CHECK(t(1.0) == doctest::Approx(1.375));
    CHECK(t.inverse()(1.375) == doctest::Approx(1.0));
}

TEST_CASE("mobius maps satisfy the lift law and canonical normalization") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> unit(-2.0, 2.0);
    for (int trial = 0; trial < 200; ++trial) {
        Mat2 m{unit(rng), unit(rng), unit(rng), unit(rng)};
        if (!(m.det() > 0.01)) continue;
        const LiftedCircleMap f = LiftedCircleMap::mobius(m);
        CHECK(lift_law_deviation(f) < 1e-10);
        const double v0 = f(0.0);
        CHECK(v0 >= 0.0);
        CHECK(v0 < 1.0);
        // strictly increasing on a sample grid
        double prev = f(-1.0);
        for (int i = 1; i <= 64; ++i) {
            const double y = f(-1.0 + 2.0 * i / 64);
            CHECK(y > prev);
            prev = y;
        }
        // inverse really inverts
        const LiftedCircleMap g = f.inverse();
        for (double x : {-1.3, 0.0, 0.4, 0.5, 0.97})
            CHECK(std::fabs(g(f(x)) - x) < 1e-11);
    }
    CHECK_THROWS_AS(LiftedCircleMap::mobius({1, 0, 0, -1}), std::invalid_argument);
}

TEST_CASE("elliptic rotation matrices act as exact rigid rotations") {
    const double angle = 0.73;
    const LiftedCircleMap f = rotation_matrix_map(angle);
    for (double x : {-0.7, 0.0, 0.31, 0.5, 0.99, 2.25})
        CHECK(std::fabs(f(x) - (x + angle / kPi)) < 1e-13);
}

TEST_CASE("hyperbolic diagonal matrix fixes the chart endpoints") {
    const LiftedCircleMap f = LiftedCircleMap::mobius({2.0, 0.0, 0.0, 0.5});
    // p = 0 and p = infinity are fixed: x = 1/2 and x = 0
    CHECK(std::fabs(f(0.5) - 0.5) < 1e-13);
    CHECK(std::fabs(f(0.0)) < 1e-13);
    CHECK(lift_law_deviation(f) < 1e-10);
}

TEST_CASE("winding shifts the lift by an integer") {
    const Mat2 m{1.0, 0.3, 0.3, 1.2};
    const LiftedCircleMap f0 = LiftedCircleMap::mobius(m, 0);
    const LiftedCircleMap f2 = LiftedCircleMap::mobius(m, 2);
    for (double x : {-0.4, 0.0, 0.7}) CHECK(std::fabs(f2(x) - (f0(x) + 2)) < 1e-13);
}

TEST_CASE("smooth maps validate 1 + d' > 0") {
    SmoothDisplacement good;
    good.sin_coeffs = {0.05 / (2 * kPi)};
    CHECK_NOTHROW(LiftedCircleMap::smooth(good));

    SmoothDisplacement bad;
    bad.sin_coeffs = {0.5};  // derivative reaches pi > 1
    CHECK_THROWS_AS(LiftedCircleMap::smooth(bad), std::invalid_argument);
}

TEST_CASE("smooth inverse via monotone solve") {
    std::mt19937 rng(5);
    const LiftedCircleMap h = random_smooth(rng);
    const LiftedCircleMap hinv = h.inverse();
    for (double x : {-2.0, -0.3, 0.0, 0.5, 1.7}) {
        CHECK(std::fabs(hinv(h(x)) - x) < 1e-10);
        CHECK(std::fabs(h(hinv(x)) - x) < 1e-10);
    }
}

TEST_CASE("composites compose right to left") {
    const LiftedCircleMap f = LiftedCircleMap::rigid(0.25);
    const LiftedCircleMap g = LiftedCircleMap::cover_lift(LiftedCircleMap::rigid(0.5), 2);
    const LiftedCircleMap fg = LiftedCircleMap::compose({f, g});
    CHECK(fg(0.0) == doctest::Approx(g(0.0) + 0.25).epsilon(1e-14));
    const LiftedCircleMap inv = fg.inverse();
    for (double x : {-1.0, 0.2, 0.8}) CHECK(std::fabs(inv(fg(x)) - x) < 1e-11);
}

TEST_CASE("cover lift of degree one is the map itself") {
    const LiftedCircleMap f = LiftedCircleMap::rigid(0.3);
    const LiftedCircleMap same = LiftedCircleMap::cover_lift(f, 1);
    CHECK(same.is_rigid());
    CHECK(same(0.25) == f(0.25));
    CHECK_THROWS_AS(LiftedCircleMap::cover_lift(f, 0), std::invalid_argument);
}

TEST_CASE("cover lift commutes with x -> x + 1/n") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const LiftedCircleMap base = random_smooth(rng);
        for (long long n : {2, 3, 6}) {
            const LiftedCircleMap lifted = LiftedCircleMap::cover_lift(base, n);
            double dev = 0;
            for (int i = 0; i <= 200; ++i) {
                const double x = -1.0 + 2.0 * i / 200;
                dev = std::max(dev, std::fabs(lifted(x + 1.0 / n) - lifted(x) - 1.0 / n));
            }
            CHECK(dev < 1e-12);
            CHECK(lift_law_deviation(lifted) < 1e-10);
        }
    }
}

TEST_CASE("mobius evaluation is continuous and monotone across the domain seam") {
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> unit(-2.0, 2.0);
    const double offsets[] = {-1e-9, -1e-12, -1e-15, 0.0, 1e-15, 1e-12, 1e-9};
    for (int trial = 0; trial < 100; ++trial) {
        Mat2 m{unit(rng), unit(rng), unit(rng), unit(rng)};
        if (!(m.det() > 0.05)) continue;
        const LiftedCircleMap f = LiftedCircleMap::mobius(m);
        for (double seam : {-0.5, 0.0, 0.5, 1.0, 1.5}) {
            double prev = f(seam - 1e-9);
            for (double off : offsets) {
                const double y = f(seam + off);
                CHECK(y >= prev - 1e-9);          // monotone through the seam
                CHECK(std::fabs(y - prev) < 1e-6);  // no branch jump
                prev = y;
            }
        }
    }
}

TEST_CASE("lift law on a mixed corpus, 1000-point grid") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> unit(-1.5, 1.5);
    for (int trial = 0; trial < 50; ++trial) {
        Mat2 m{unit(rng), unit(rng), unit(rng), unit(rng)};
        if (!(m.det() > 0.05)) continue;
        const LiftedCircleMap f = LiftedCircleMap::compose(
            {random_smooth(rng), LiftedCircleMap::mobius(m), LiftedCircleMap::rigid(unit(rng))});
        CHECK(lift_law_deviation(f, 1000) < 1e-10);
    }
}
