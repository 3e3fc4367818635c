#include <folcalc/seifert.hpp>

#include <algorithm>
#include <stdexcept>

namespace folcalc {

bool operator==(const SeifertInvariants& a, const SeifertInvariants& b) {
    return a.genus == b.genus && a.b == b.b && a.normalized == b.normalized &&
           a.slopes == b.slopes;
}

void require_normalized(const SeifertInvariants& inv, const char* where) {
    if (!inv.normalized)
        throw std::invalid_argument(std::string(where) + ": input must be normalized");
    for (size_t i = 0; i < inv.slopes.size(); ++i) {
        const Rational& s = inv.slopes[i];
        if (s.sign() <= 0 || s >= Rational(1))
            throw std::invalid_argument(std::string(where) + ": slope out of (0,1)");
        if (i > 0 && s < inv.slopes[i - 1])
            throw std::invalid_argument(std::string(where) + ": slopes not sorted");
    }
}

SeifertInvariants normalize(const SeifertInvariants& raw) {
    SeifertInvariants out;
    out.genus = raw.genus;
    out.b = raw.b;
    for (const Rational& s : raw.slopes) {
        BigInt ip = s.floor();
        Rational f = s - Rational(ip);
        out.b += ip.convert_to<long long>();
        if (!f.is_zero()) out.slopes.push_back(f);
    }
    std::sort(out.slopes.begin(), out.slopes.end());
    out.normalized = true;
    return out;
}

SeifertInvariants reverse_orientation(const SeifertInvariants& inv) {
    require_normalized(inv, "reverse_orientation");
    SeifertInvariants out;
    out.genus = inv.genus;
    out.b = -inv.b - inv.fiber_count();
    out.slopes.reserve(inv.slopes.size());
    for (const Rational& s : inv.slopes) out.slopes.push_back(Rational(1) - s);
    std::sort(out.slopes.begin(), out.slopes.end());
    out.normalized = true;
    return out;
}

Rational euler_number(const SeifertInvariants& inv) {
    Rational sum(inv.b);
    for (const Rational& s : inv.slopes) sum += s;
    return -sum;
}

Rational orbifold_euler_characteristic(const SeifertInvariants& inv) {
    Rational chi(2 - 2 * inv.genus);
    for (const Rational& s : inv.slopes)
        chi -= Rational(1) - Rational(BigInt(1), s.den());
    return chi;
}

OrbifoldType base_orbifold_type(const SeifertInvariants& inv) {
    require_normalized(inv, "base_orbifold_type");
    const int sgn = orbifold_euler_characteristic(inv).sign();
    if (sgn > 0) return OrbifoldType::spherical;
    if (sgn == 0) return OrbifoldType::euclidean;
    return OrbifoldType::hyperbolic;
}

std::string to_string(OrbifoldType t) {
    switch (t) {
        case OrbifoldType::spherical: return "spherical";
        case OrbifoldType::euclidean: return "euclidean";
        default: return "hyperbolic";
    }
}

}  // namespace folcalc
