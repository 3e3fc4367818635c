#include <folcalc/dynamics.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace folcalc {

namespace {

using Cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// 2x2 complex matrices acting on the disk / half-plane by fractional linear
// transformations.
struct CMat {
    Cplx a, b, c, d;

    CMat operator*(const CMat& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    CMat inverse() const {
        const Cplx det = a * d - b * c;
        return {d / det, -b / det, -c / det, a / det};
    }
    Cplx apply(Cplx z) const { return (a * z + b) / (c * z + d); }
};

// disk isometry sending p to the origin
CMat disk_translate(Cplx p) { return {Cplx(1), -p, -std::conj(p), Cplx(1)}; }

CMat disk_rotation(double phi) {
    return {std::polar(1.0, phi / 2), Cplx(0), Cplx(0), std::polar(1.0, -phi / 2)};
}

// disk isometry sending p to 0 and q to the positive real axis
CMat positioning(Cplx p, Cplx q) {
    const CMat t = disk_translate(p);
    return disk_rotation(-std::arg(t.apply(q))) * t;
}

// the orientation-preserving disk isometry with src[0] -> dst[0], src[1] -> dst[1]
CMat pair_map(Cplx src0, Cplx src1, Cplx dst0, Cplx dst1) {
    return positioning(dst0, dst1).inverse() * positioning(src0, src1);
}

// conjugate a disk isometry by the Cayley transform z -> (z-i)/(z+i) to get a
// real matrix acting on the upper half-plane
Mat2 to_half_plane(const CMat& u) {
    const CMat cayley{Cplx(1), Cplx(0, -1), Cplx(1), Cplx(0, 1)};
    CMat m = cayley.inverse() * u * cayley;
    const Cplx det = m.a * m.d - m.b * m.c;
    const Cplx s = std::sqrt(det);
    m = {m.a / s, m.b / s, m.c / s, m.d / s};
    const double imag_norm = std::max({std::fabs(m.a.imag()), std::fabs(m.b.imag()),
                                       std::fabs(m.c.imag()), std::fabs(m.d.imag())});
    if (imag_norm > 1e-9)
        throw std::runtime_error("fuchsian_generators: conjugated matrix not real");
    return {m.a.real(), m.b.real(), m.c.real(), m.d.real()};
}

}  // namespace

SurfaceGroupRep fuchsian_generators(long long g) {
    if (g < 2) throw std::invalid_argument("fuchsian_generators: genus must be >= 2");
    const long long n = 4 * g;

    // regular hyperbolic 4g-gon, one vertex cycle of total angle 2 pi:
    // cosh(circumradius) = cot^2(pi/4g)
    const double cot = 1.0 / std::tan(kPi / static_cast<double>(n));
    const double radius = std::acosh(cot * cot);
    const double r_euclid = std::tanh(radius / 2);

    std::vector<Cplx> vertex(n);
    for (long long k = 0; k < n; ++k)
        vertex[k] = std::polar(r_euclid, 2 * kPi * static_cast<double>(k) / static_cast<double>(n));

    // Edge e_j runs from vertex j to vertex j+1; the boundary word reads
    // a1 b1 a1^-1 b1^-1 a2 ... counterclockwise.  The pairing transformation
    // glues the a_i^-1 edge onto the a_i edge with reversed endpoints, and
    // the generator list stores (A_i, B_i^-1), for which the commutator
    // product [A_1, B_1^-1]...[A_g, B_g^-1] is the polygon's vertex relation.
    SurfaceGroupRep rep;
    rep.genus = g;
    for (long long i = 0; i < g; ++i) {
        const long long j = 4 * i;
        auto v = [&](long long k) { return vertex[((k % n) + n) % n]; };
        const CMat A = pair_map(v(j + 2), v(j + 3), v(j + 1), v(j));
        const CMat B = pair_map(v(j + 3), v(j + 4), v(j + 2), v(j + 1));
        rep.generators.push_back(LiftedCircleMap::mobius(to_half_plane(A)));
        rep.generators.push_back(LiftedCircleMap::mobius(to_half_plane(B.inverse())));
    }
    rep.relation_residual = relation_residual(rep);
    return rep;
}

}  // namespace folcalc
