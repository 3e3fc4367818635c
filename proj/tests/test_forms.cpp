#include <folcalc/forms.hpp>

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace folcalc;

namespace {

// cos(z) dx - sin(z) dy on z in [0, 1]: the constant-twist contact form
OneFormField twist_form() {
    auto zero = [](const Vec3&) { return 0.0; };
    OneFormField f;
    f.name = "twist";
    f.domain = {0.0, 1.0};
    f.P = {[](const Vec3& p) { return std::cos(p.z); }, zero, zero,
           [](const Vec3& p) { return -std::sin(p.z); }};
    f.Q = {[](const Vec3& p) { return -std::sin(p.z); }, zero, zero,
           [](const Vec3& p) { return -std::cos(p.z); }};
    f.R = ScalarField::constant(0);
    return f;
}

OneFormField dz_form() {
    OneFormField f;
    f.name = "dz";
    f.domain = {0.0, 1.0};
    f.P = ScalarField::constant(0);
    f.Q = ScalarField::constant(0);
    f.R = ScalarField::constant(1);
    return f;
}

}  // namespace

TEST_CASE("wedge_self closed and contact examples") {
    CHECK(wedge_self(dz_form(), {0.3, 0.4, 0.5}) == 0.0);
    const OneFormField tw = twist_form();
    for (double z : {0.0, 0.21, 0.77, 1.0})
        CHECK(wedge_self(tw, {0.1, 0.9, z}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(wedge_self(tw, {0.1, 0.9, 3.0}), std::invalid_argument);
}

TEST_CASE("pairing identities") {
    const OneFormField tw = twist_form();
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const Vec3 p{unit(rng), unit(rng), unit(rng)};
        CHECK(pairing(tw, tw, p) == doctest::Approx(2 * wedge_self(tw, p)).epsilon(1e-12));
        CHECK(pairing(tw, dz_form(), p) == doctest::Approx(pairing(dz_form(), tw, p)));
    }
    // dz ^ d(beta) vanishes for any beta depending on z alone, so the pairing
    // of dz with the rotating form is identically zero (the first-order term
    // of the deformation family vanishes; the quadratic term carries f')
    for (double z : {0.1, 0.5, 0.9})
        CHECK(pairing(dz_form(), twist_form(), {0.2, 0.3, z}) == doctest::Approx(0.0));
}

TEST_CASE("pairing scaling law <f a, f b> = f^2 <a, b>") {
    ScalarField f;
    f.value = [](const Vec3& p) { return 2.0 + std::sin(2 * M_PI * p.x) * std::cos(2 * M_PI * p.y) + 0.5 * p.z; };
    f.dx = [](const Vec3& p) { return 2 * M_PI * std::cos(2 * M_PI * p.x) * std::cos(2 * M_PI * p.y); };
    f.dy = [](const Vec3& p) { return -2 * M_PI * std::sin(2 * M_PI * p.x) * std::sin(2 * M_PI * p.y); };
    f.dz = [](const Vec3&) { return 0.5; };

    const OneFormField a = twist_form();
    const OneFormField b = build_deformation(0.7);
    // rebase b's domain to [0,1] is not allowed (mismatch): build a twist pair instead
    const OneFormField fa = scale(a, f);
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const Vec3 p{unit(rng), unit(rng), unit(rng)};
        const double f2 = f.value(p) * f.value(p);
        CHECK(std::fabs(pairing(fa, scale(dz_form(), f), p) -
                        f2 * pairing(a, dz_form(), p)) < 1e-8);
        CHECK(std::fabs(wedge_self(fa, p) - f2 * wedge_self(a, p)) < 1e-8);
    }
    CHECK_THROWS_AS(pairing(a, b, Vec3{0, 0, 0.5}), std::invalid_argument);
}

TEST_CASE("scaling with constant 2 quadruples the pairing") {
    const OneFormField a = twist_form();
    const OneFormField a2 = scale(a, ScalarField::constant(2));
    const OneFormField b = dz_form();
    const OneFormField b2 = scale(b, ScalarField::constant(2));
    for (double z : {0.2, 0.8}) {
        const Vec3 p{0.3, 0.6, z};
        CHECK(pairing(a2, b2, p) == doctest::Approx(4 * pairing(a, b, p)));
    }
}

TEST_CASE("reeb model is a foliation") {
    const OneFormField reeb = build_reeb();
    CHECK(derivative_selftest(reeb, 1000) < 1e-6);
    CHECK(min_coefficient_norm2(reeb, 64) > 0.1);
    const ClassifyResult res = classify(reeb, 32, 1e-9);
    CHECK(res.cls == FormClass::foliation);
    CHECK(std::fabs(res.min) < 1e-9);
    CHECK(std::fabs(res.max) < 1e-9);
}

TEST_CASE("spiral models are foliations") {
    const OneFormField spun = build_spiral(1, 0, 1, 0);
    CHECK(classify(spun, 32, 1e-9).cls == FormClass::foliation);
    CHECK(derivative_selftest(spun, 500) < 1e-6);

    const OneFormField spiralled = build_spiral(1, 0, -1, 0);
    CHECK(classify(spiralled, 32, 1e-9).cls == FormClass::foliation);

    const OneFormField skew = build_spiral(0.6, -0.8, 0.3, 0.95);
    CHECK(classify(skew, 32, 1e-9).cls == FormClass::foliation);
    CHECK(min_coefficient_norm2(skew, 64) > 0.01);
}

TEST_CASE("deformation family: wedge equals t^2 f'(z)") {
    for (double t : {0.0, 0.1, 1.0}) {
        const OneFormField a = build_deformation(t);
        CHECK(derivative_selftest(a, 400) < 1e-6);
        std::mt19937 rng(43);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        // recover f' from the t = 1 member: wedge(p) at t=1 equals f'(z)
        const OneFormField unit_member = build_deformation(1.0);
        for (int i = 0; i < 500; ++i) {
            const Vec3 p{unit(rng), unit(rng), -1.0 + 2.0 * unit(rng)};
            CHECK(std::fabs(wedge_self(a, p) - t * t * wedge_self(unit_member, p)) < 1e-6);
        }
    }
    CHECK(classify(build_deformation(0.0), 32, 1e-12).cls == FormClass::foliation);
    CHECK(classify(build_deformation(0.1), 32, 1e-9).cls == FormClass::positive_confoliation);
    CHECK_THROWS_AS(build_deformation(0.1, -0.5, -2.0), std::invalid_argument);
}

TEST_CASE("linearization consistency: 2 (wedge(a_t) - wedge(a_0)) / t^2 = 2 f'") {
    const OneFormField small = build_deformation(1e-3);
    const OneFormField base = build_deformation(0.0);
    const OneFormField unit_member = build_deformation(1.0);
    for (double z : {-0.2, -0.1, 0.0, 0.1, 0.2}) {
        const Vec3 p{0.5, 0.5, z};
        const double numeric =
            2.0 * (wedge_self(small, p) - wedge_self(base, p)) / (1e-3 * 1e-3);
        CHECK(std::fabs(numeric - 2.0 * wedge_self(unit_member, p)) < 1e-4);
    }
}

TEST_CASE("normal form is positive contact") {
    const OneFormField nf = build_normal_form(1, 1.0, 0.0);
    const ClassifyResult res = classify(nf, 32, 1e-9);
    CHECK(res.cls == FormClass::positive_contact);
    CHECK(res.min == doctest::Approx(2 * M_PI).epsilon(1e-9));
    CHECK(res.max == doctest::Approx(2 * M_PI).epsilon(1e-9));
    CHECK(derivative_selftest(nf, 400) < 1e-6);

    const OneFormField nf3 = build_normal_form(3, 0.5, -1.0);
    CHECK(classify(nf3, 32, 1e-9).min == doctest::Approx(2 * M_PI * 3 * 1.25).epsilon(1e-9));
}

TEST_CASE("mixed-sign wedge classifies as indefinite") {
    // dz + cos(f) dx - sin(f) dy with oscillating f: wedge = f'(z) changes sign
    auto zero = [](const Vec3&) { return 0.0; };
    auto f = [](double z) { return 0.3 * std::sin(2 * M_PI * z); };
    auto df = [](double z) { return 0.3 * 2 * M_PI * std::cos(2 * M_PI * z); };
    OneFormField osc;
    osc.name = "oscillating";
    osc.domain = {0.0, 1.0};
    osc.P = {[=](const Vec3& p) { return std::cos(f(p.z)); }, zero, zero,
             [=](const Vec3& p) { return -std::sin(f(p.z)) * df(p.z); }};
    osc.Q = {[=](const Vec3& p) { return -std::sin(f(p.z)); }, zero, zero,
             [=](const Vec3& p) { return -std::cos(f(p.z)) * df(p.z); }};
    osc.R = ScalarField::constant(1.0);
    const ClassifyResult res = classify(osc, 32, 1e-9);
    CHECK(res.cls == FormClass::indefinite);
    CHECK(res.min < -0.1);
    CHECK(res.max > 0.1);
}

TEST_CASE("smooth step profile is flat at the endpoints") {
    CHECK(smooth_step(0.0) == 0.0);
    CHECK(smooth_step(1.0) == 1.0);
    CHECK(smooth_step(-0.5) == 0.0);
    CHECK(smooth_step(1.5) == 1.0);
    CHECK(smooth_step_deriv(0.0) == 0.0);
    CHECK(smooth_step_deriv(1.0) == 0.0);
    CHECK(smooth_step(0.02) < 1e-20);
    CHECK(1.0 - smooth_step(0.98) < 1e-20);
    CHECK(smooth_step_deriv(0.02) < 1e-15);
    double prev = 0;
    for (int i = 1; i <= 100; ++i) {
        const double v = smooth_step(i / 100.0);
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("every model passes the derivative self-test at 1000 points") {
    CHECK(derivative_selftest(build_reeb(), 1000) < 1e-6);
    CHECK(derivative_selftest(build_spiral(0.6, -0.8, 0.3, 0.95), 1000) < 1e-6);
    CHECK(derivative_selftest(build_deformation(0.5), 1000) < 1e-6);
    CHECK(derivative_selftest(build_normal_form(2, 1.0, -0.5), 1000) < 1e-6);
}

TEST_CASE("model coefficients never vanish simultaneously") {
    CHECK(min_coefficient_norm2(build_reeb(), 48) > 0.1);
    CHECK(min_coefficient_norm2(build_spiral(1, 0, -1, 0.5), 48) > 0.01);
    CHECK(min_coefficient_norm2(build_deformation(0.0), 48) >= 1.0);
    CHECK(min_coefficient_norm2(build_deformation(1.0), 48) >= 1.0);
    CHECK(min_coefficient_norm2(build_normal_form(1, 1, 0), 48) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("twist form classifies as positive contact") {
    CHECK(classify(twist_form(), 32, 1e-9).cls == FormClass::positive_contact);
    CHECK(classify(dz_form(), 16, 1e-12).cls == FormClass::foliation);
}
