#include <folcalc/circle_map.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace folcalc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kBranchTol = 1e-12;
}  // namespace

double SmoothDisplacement::value(double x) const {
    double v = c0;
    for (size_t k = 0; k < sin_coeffs.size(); ++k)
        v += sin_coeffs[k] * std::sin(2 * kPi * (k + 1) * x);
    for (size_t k = 0; k < cos_coeffs.size(); ++k)
        v += cos_coeffs[k] * std::cos(2 * kPi * (k + 1) * x);
    return v;
}

double SmoothDisplacement::derivative(double x) const {
    double v = 0;
    for (size_t k = 0; k < sin_coeffs.size(); ++k)
        v += sin_coeffs[k] * 2 * kPi * (k + 1) * std::cos(2 * kPi * (k + 1) * x);
    for (size_t k = 0; k < cos_coeffs.size(); ++k)
        v -= cos_coeffs[k] * 2 * kPi * (k + 1) * std::sin(2 * kPi * (k + 1) * x);
    return v;
}

struct LiftedCircleMap::Node {
    MapKind kind;

    // rigid
    double c = 0;

    // mobius (matrix normalized to det 1)
    Mat2 m;
    int winding = 0;
    double phi_ref = 0;  // principal image angle of the x = -1/2 seam point
    double base = 0;     // integer offset making the winding-0 lift canonical

    // smooth
    SmoothDisplacement disp;

    // composite / cover_lift / inverse
    std::vector<LiftedCircleMap> parts;
    long long degree = 1;

    double eval(double x) const;
};

namespace {

double eval_mobius(const LiftedCircleMap::Node& n, double x) {
    const double k = std::floor(x + 0.5);
    const double xb = x - k;  // in [-1/2, 1/2)
    const double u = std::sin(kPi * (xb - 0.5));
    const double v = std::cos(kPi * (xb - 0.5));
    const double N = n.m.a * u + n.m.b * v;
    const double D = n.m.c * u + n.m.d * v;
    const double p0 = std::atan2(N, D);
    double rep = p0 - kPi * std::floor((p0 - n.phi_ref) / kPi);
    // branch guards at the fundamental-domain seam
    if (xb < -0.5 + kBranchTol && rep > n.phi_ref + kPi - 1e-9) rep -= kPi;
    if (xb > 0.5 - kBranchTol && rep < n.phi_ref + 1e-9) rep += kPi;
    return k + 0.5 + rep / kPi - n.base + n.winding;
}

double invert_monotone(const LiftedCircleMap& f, double y) {
    // f is a degree-one lift, so |f(t) - t| is bounded by |f(0)| + 2
    const double slack = std::abs(f(0.0)) + 2.0;
    double lo = y - slack, hi = y + slack;
    double flo = f(lo), fhi = f(hi);
    while (flo > y) { lo -= slack; flo = f(lo); }
    while (fhi < y) { hi += slack; fhi = f(hi); }
    const double tol = 1e-15 * (1 + std::abs(y));
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        // secant step inside the bracket, bisection when it degenerates
        double mid = lo + (y - flo) * (hi - lo) / (fhi - flo);
        const double margin = 0.01 * (hi - lo);
        if (!(mid > lo + margin) || !(mid < hi - margin)) mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid < y) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double LiftedCircleMap::Node::eval(double x) const {
    switch (kind) {
        case MapKind::rigid:
            return x + c;
        case MapKind::mobius:
            return eval_mobius(*this, x);
        case MapKind::smooth:
            return x + disp.value(x);
        case MapKind::composite: {
            double y = x;
            for (auto it = parts.rbegin(); it != parts.rend(); ++it) y = (*it)(y);
            return y;
        }
        case MapKind::cover_lift:
            return parts.front()(degree * x) / static_cast<double>(degree);
        case MapKind::inverse:
            return invert_monotone(parts.front(), x);
    }
    return x;
}

LiftedCircleMap::LiftedCircleMap() {
    auto n = std::make_shared<Node>();
    n->kind = MapKind::rigid;
    n->c = 0;
    node_ = std::move(n);
}

LiftedCircleMap::LiftedCircleMap(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

double LiftedCircleMap::operator()(double x) const { return node_->eval(x); }

LiftedCircleMap LiftedCircleMap::rigid(double c) {
    auto n = std::make_shared<Node>();
    n->kind = MapKind::rigid;
    n->c = c;
    return LiftedCircleMap(std::move(n));
}

LiftedCircleMap LiftedCircleMap::mobius(const Mat2& m_in, int winding) {
    const double det = m_in.det();
    if (!(det > 0))
        throw std::invalid_argument("mobius: matrix must have positive determinant");
    const double s = std::sqrt(det);
    auto n = std::make_shared<Node>();
    n->kind = MapKind::mobius;
    n->m = {m_in.a / s, m_in.b / s, m_in.c / s, m_in.d / s};
    n->winding = 0;
    n->phi_ref = std::atan2(-n->m.b, -n->m.d);
    n->base = 0;
    n->base = std::floor(eval_mobius(*n, 0.0));  // canonical: winding 0 lands in [0,1) at x = 0
    n->winding = winding;
    return LiftedCircleMap(std::move(n));
}

LiftedCircleMap LiftedCircleMap::smooth(const SmoothDisplacement& d) {
    constexpr int kGrid = 8192;
    for (int i = 0; i < kGrid; ++i) {
        const double x = static_cast<double>(i) / kGrid;
        if (1.0 + d.derivative(x) <= 1e-9)
            throw std::invalid_argument("smooth: displacement violates 1 + d' > 0");
    }
    auto n = std::make_shared<Node>();
    n->kind = MapKind::smooth;
    n->disp = d;
    return LiftedCircleMap(std::move(n));
}

LiftedCircleMap LiftedCircleMap::compose(std::vector<LiftedCircleMap> maps) {
    if (maps.empty()) return LiftedCircleMap();
    if (maps.size() == 1) return maps.front();
    auto n = std::make_shared<Node>();
    n->kind = MapKind::composite;
    n->parts = std::move(maps);
    return LiftedCircleMap(std::move(n));
}

LiftedCircleMap LiftedCircleMap::cover_lift(const LiftedCircleMap& base, long long deg) {
    if (deg < 1) throw std::invalid_argument("cover_lift: degree must be >= 1");
    if (deg == 1) return base;
    auto n = std::make_shared<Node>();
    n->kind = MapKind::cover_lift;
    n->parts = {base};
    n->degree = deg;
    return LiftedCircleMap(std::move(n));
}

LiftedCircleMap LiftedCircleMap::inverse() const {
    switch (node_->kind) {
        case MapKind::rigid:
            return rigid(-node_->c);
        case MapKind::mobius: {
            const Mat2& m = node_->m;
            const Mat2 inv{m.d, -m.b, -m.c, m.a};
            LiftedCircleMap g0 = mobius(inv, 0);
            // fix the winding so that g(f(0)) = 0
            const long long shift = std::llround(g0((*this)(0.0)));
            return mobius(inv, static_cast<int>(-shift));
        }
        case MapKind::composite: {
            std::vector<LiftedCircleMap> rev;
            for (auto it = node_->parts.rbegin(); it != node_->parts.rend(); ++it)
                rev.push_back(it->inverse());
            return compose(std::move(rev));
        }
        case MapKind::cover_lift:
            return cover_lift(node_->parts.front().inverse(), node_->degree);
        case MapKind::inverse:
            return node_->parts.front();
        case MapKind::smooth:
        default: {
            auto n = std::make_shared<Node>();
            n->kind = MapKind::inverse;
            n->parts = {*this};
            return LiftedCircleMap(std::move(n));
        }
    }
}

MapKind LiftedCircleMap::kind() const { return node_->kind; }
bool LiftedCircleMap::is_rigid() const { return node_->kind == MapKind::rigid; }
double LiftedCircleMap::rigid_translation() const { return node_->c; }
const Mat2& LiftedCircleMap::mobius_matrix() const { return node_->m; }
int LiftedCircleMap::mobius_winding() const { return node_->winding; }
const SmoothDisplacement& LiftedCircleMap::smooth_displacement() const { return node_->disp; }
const std::vector<LiftedCircleMap>& LiftedCircleMap::composite_parts() const {
    return node_->parts;
}
const LiftedCircleMap& LiftedCircleMap::cover_base() const { return node_->parts.front(); }
long long LiftedCircleMap::cover_degree() const { return node_->degree; }

double lift_law_deviation(const LiftedCircleMap& f, int grid) {
    double worst = 0;
    for (int i = 0; i <= grid; ++i) {
        const double x = -1.5 + 3.0 * i / grid;
        worst = std::max(worst, std::abs(f(x + 1) - f(x) - 1));
    }
    return worst;
}

void check_lift_validity(const LiftedCircleMap& f) {
    constexpr int kProbe = 17;
    double prev = f(0.0);
    for (int i = 1; i <= kProbe; ++i) {
        const double x = static_cast<double>(i) / kProbe;
        const double y = f(x);
        if (!(y >= prev)) throw std::runtime_error("circle map: not monotone");
        if (std::abs(f(x + 1) - y - 1) > 1e-8)
            throw std::runtime_error("circle map: not unit-periodic");
        prev = y;
    }
}

}  // namespace folcalc
