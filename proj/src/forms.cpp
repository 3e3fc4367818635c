#include <folcalc/forms.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace folcalc {

namespace {
constexpr double kTwoPi = 2 * std::numbers::pi;

void require_inside(const OneFormField& f, const Vec3& p, const char* where) {
    if (!f.domain.contains(p)) throw std::invalid_argument(std::string(where) + ": point outside domain");
}

double curl_against(const OneFormField& a, const OneFormField& b, const Vec3& p) {
    // coefficient of a ^ db
    return a.P.value(p) * (b.R.dy(p) - b.Q.dz(p)) + a.Q.value(p) * (b.P.dz(p) - b.R.dx(p)) +
           a.R.value(p) * (b.Q.dx(p) - b.P.dy(p));
}

}  // namespace

ScalarField ScalarField::constant(double c) {
    auto zero = [](const Vec3&) { return 0.0; };
    return {[c](const Vec3&) { return c; }, zero, zero, zero};
}

double wedge_self(const OneFormField& alpha, const Vec3& p) {
    require_inside(alpha, p, "wedge_self");
    return curl_against(alpha, alpha, p);
}

double pairing(const OneFormField& alpha, const OneFormField& beta, const Vec3& p) {
    if (std::fabs(alpha.domain.z0 - beta.domain.z0) > 1e-12 ||
        std::fabs(alpha.domain.z1 - beta.domain.z1) > 1e-12)
        throw std::invalid_argument("pairing: domain mismatch");
    require_inside(alpha, p, "pairing");
    return curl_against(alpha, beta, p) + curl_against(beta, alpha, p);
}

OneFormField scale(const OneFormField& alpha, const ScalarField& g, const std::string& name) {
    auto mul = [g](const ScalarField& f) {
        ScalarField out;
        out.value = [g, f](const Vec3& p) { return g.value(p) * f.value(p); };
        out.dx = [g, f](const Vec3& p) { return g.dx(p) * f.value(p) + g.value(p) * f.dx(p); };
        out.dy = [g, f](const Vec3& p) { return g.dy(p) * f.value(p) + g.value(p) * f.dy(p); };
        out.dz = [g, f](const Vec3& p) { return g.dz(p) * f.value(p) + g.value(p) * f.dz(p); };
        return out;
    };
    return {mul(alpha.P), mul(alpha.Q), mul(alpha.R), alpha.domain,
            name.empty() ? alpha.name + "_scaled" : name};
}

std::string to_string(FormClass c) {
    switch (c) {
        case FormClass::foliation: return "foliation";
        case FormClass::positive_contact: return "positive_contact";
        case FormClass::positive_confoliation: return "positive_confoliation";
        default: return "indefinite";
    }
}

ClassifyResult classify(const OneFormField& alpha, int resolution, double tol) {
    if (resolution < 16) throw std::invalid_argument("classify: resolution must be >= 16");
    ClassifyResult res;
    bool first = true;
    for (int i = 0; i < resolution; ++i) {
        for (int j = 0; j < resolution; ++j) {
            for (int k = 0; k < resolution; ++k) {
                Vec3 p;
                p.x = static_cast<double>(i) / resolution;
                p.y = static_cast<double>(j) / resolution;
                p.z = alpha.domain.z0 +
                      (alpha.domain.z1 - alpha.domain.z0) * static_cast<double>(k) / (resolution - 1);
                const double v = wedge_self(alpha, p);
                if (first || v < res.min) { res.min = v; res.argmin = p; }
                if (first || v > res.max) { res.max = v; res.argmax = p; }
                first = false;
                ++res.points;
            }
        }
    }
    if (std::fabs(res.min) < tol && std::fabs(res.max) < tol)
        res.cls = FormClass::foliation;
    else if (res.min > tol)
        res.cls = FormClass::positive_contact;
    else if (res.min > -tol && res.max > tol)
        res.cls = FormClass::positive_confoliation;
    else
        res.cls = FormClass::indefinite;
    return res;
}

double smooth_step(double t) {
    if (t <= 0) return 0;
    if (t >= 1) return 1;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

double smooth_step_deriv(double t) {
    if (t <= 0 || t >= 1) return 0;
    const double a = std::exp(-1.0 / t);
    const double b = std::exp(-1.0 / (1.0 - t));
    const double da = a / (t * t);
    const double db = -b / ((1.0 - t) * (1.0 - t));
    return (da * b - a * db) / ((a + b) * (a + b));
}

namespace {

// scalar field depending on z only
ScalarField z_profile(std::function<double(double)> v, std::function<double(double)> dv) {
    auto zero = [](const Vec3&) { return 0.0; };
    return {[v](const Vec3& p) { return v(p.z); }, zero, zero,
            [dv](const Vec3& p) { return dv(p.z); }};
}

}  // namespace

OneFormField build_reeb() {
    // affine reparametrization of [z0, z1] onto [0, 1]
    const double z0 = 0.05, z1 = 1.0;
    const double scale = 1.0 / (z1 - z0);
    auto gamma = [=](double z) { return 1.0 - smooth_step((z - z0) * scale); };
    auto dgamma = [=](double z) { return -smooth_step_deriv((z - z0) * scale) * scale; };

    OneFormField f;
    f.name = "reeb";
    f.domain = {z0, z1};
    f.P = z_profile(gamma, dgamma);
    f.Q = ScalarField::constant(0);
    f.R = z_profile([=](double z) { return 1.0 - gamma(z); }, [=](double z) { return -dgamma(z); });
    return f;
}

OneFormField build_spiral(double am, double bm, double ap, double bp) {
    if (am == 0 && bm == 0) throw std::invalid_argument("build_spiral: alpha_- vanishes");
    if (ap == 0 && bp == 0) throw std::invalid_argument("build_spiral: alpha_+ vanishes");
    // rho: 0 on z <= 1/4, 1 on z >= 3/4
    auto rho = [](double z) { return smooth_step((z - 0.25) * 2.0); };
    auto drho = [](double z) { return smooth_step_deriv((z - 0.25) * 2.0) * 2.0; };

    OneFormField f;
    f.name = "spiral";
    f.domain = {-1.0, 1.0};
    f.P = z_profile([=](double z) { return rho(-z) * am + rho(z) * ap; },
                    [=](double z) { return -drho(-z) * am + drho(z) * ap; });
    f.Q = z_profile([=](double z) { return rho(-z) * bm + rho(z) * bp; },
                    [=](double z) { return -drho(-z) * bm + drho(z) * bp; });
    f.R = z_profile([=](double z) { return 1.0 - rho(std::fabs(z)); },
                    [=](double z) { return -drho(std::fabs(z)) * (z < 0 ? -1.0 : 1.0); });
    return f;
}

OneFormField build_deformation(double t, double theta_minus, double theta_plus) {
    if (t < 0) throw std::invalid_argument("build_deformation: t must be >= 0");
    if (!(-std::numbers::pi < theta_minus && theta_minus < theta_plus && theta_plus < 0))
        throw std::invalid_argument("build_deformation: need -pi < theta_- < theta_+ < 0");
    // f: theta_- for z <= -1/4, theta_+ for z >= 1/4, increasing in between
    const double span = theta_plus - theta_minus;
    auto fprof = [=](double z) { return theta_minus + span * smooth_step((z + 0.25) * 2.0); };
    auto dfprof = [=](double z) { return span * smooth_step_deriv((z + 0.25) * 2.0) * 2.0; };

    OneFormField f;
    f.name = "deformation";
    f.domain = {-1.0, 1.0};
    f.P = z_profile([=](double z) { return t * std::cos(fprof(z)); },
                    [=](double z) { return -t * std::sin(fprof(z)) * dfprof(z); });
    f.Q = z_profile([=](double z) { return -t * std::sin(fprof(z)); },
                    [=](double z) { return -t * std::cos(fprof(z)) * dfprof(z); });
    f.R = ScalarField::constant(1.0);
    return f;
}

OneFormField build_normal_form(int n, double c1, double c2) {
    if (n < 1) throw std::invalid_argument("build_normal_form: n must be >= 1");
    if (c1 == 0 && c2 == 0) throw std::invalid_argument("build_normal_form: lambda vanishes");
    // lambda = c1 dx + c2 dz, lambda.J = -c2 dx + c1 dz with the quarter turn
    // oriented so that the result is a positive contact form
    const double w = kTwoPi * n;
    auto zero = [](const Vec3&) { return 0.0; };
    OneFormField f;
    f.name = "normal_form";
    f.domain = {0.0, 1.0};
    f.P.value = [=](const Vec3& p) { return c1 * std::cos(w * p.y) - c2 * std::sin(w * p.y); };
    f.P.dx = zero;
    f.P.dy = [=](const Vec3& p) { return w * (-c1 * std::sin(w * p.y) - c2 * std::cos(w * p.y)); };
    f.P.dz = zero;
    f.Q = ScalarField::constant(0);
    f.R.value = [=](const Vec3& p) { return c2 * std::cos(w * p.y) + c1 * std::sin(w * p.y); };
    f.R.dx = zero;
    f.R.dy = [=](const Vec3& p) { return w * (-c2 * std::sin(w * p.y) + c1 * std::cos(w * p.y)); };
    f.R.dz = zero;
    return f;
}

double derivative_selftest(const OneFormField& alpha, int points, unsigned seed, double h) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double zlo = alpha.domain.z0 + h, zhi = alpha.domain.z1 - h;
    double worst = 0;
    for (int i = 0; i < points; ++i) {
        Vec3 p{unit(rng), unit(rng), zlo + (zhi - zlo) * unit(rng)};
        for (const ScalarField* f : {&alpha.P, &alpha.Q, &alpha.R}) {
            const auto probe = [&](auto shift, const std::function<double(const Vec3&)>& d) {
                Vec3 hi = p, lo = p;
                shift(hi, +h);
                shift(lo, -h);
                const double fd = (f->value(hi) - f->value(lo)) / (2 * h);
                worst = std::max(worst, std::fabs(fd - d(p)));
            };
            probe([](Vec3& q, double s) { q.x += s; }, f->dx);
            probe([](Vec3& q, double s) { q.y += s; }, f->dy);
            probe([](Vec3& q, double s) { q.z += s; }, f->dz);
        }
    }
    return worst;
}

double min_coefficient_norm2(const OneFormField& alpha, int resolution) {
    double best = -1;
    for (int i = 0; i < resolution; ++i) {
        for (int k = 0; k < resolution; ++k) {
            Vec3 p;
            p.x = static_cast<double>(i) / resolution;
            p.y = static_cast<double>((i * 7) % resolution) / resolution;
            p.z = alpha.domain.z0 +
                  (alpha.domain.z1 - alpha.domain.z0) * static_cast<double>(k) / (resolution - 1);
            const double n2 = alpha.P.value(p) * alpha.P.value(p) +
                              alpha.Q.value(p) * alpha.Q.value(p) +
                              alpha.R.value(p) * alpha.R.value(p);
            if (best < 0 || n2 < best) best = n2;
        }
    }
    return best;
}

}  // namespace folcalc
