#include <folcalc/json_io.hpp>

#include <limits>
#include <stdexcept>

namespace folcalc {

namespace {
const BigInt kI64Min(std::numeric_limits<long long>::min());
const BigInt kI64Max(std::numeric_limits<long long>::max());
}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MalformedInput(std::string("malformed JSON: ") + e.what());
    }
}

Json to_json(const BigInt& n) {
    if (n >= kI64Min && n <= kI64Max) return Json(n.convert_to<long long>());
    return Json(n.str());
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw MalformedInput("expected integer or integer string");
}

Json to_json(const Rational& r) {
    return Json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

Rational rational_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw MalformedInput("rational: expected {\"num\", \"den\"}");
    return Rational(bigint_from_json(j.at("num")), bigint_from_json(j.at("den")));
}

Json to_json(const SeifertInvariants& inv) {
    Json slopes = Json::array();
    for (const Rational& s : inv.slopes) slopes.push_back(to_json(s));
    return Json{{"g", inv.genus}, {"b", inv.b}, {"slopes", slopes}, {"normalized", inv.normalized}};
}

SeifertInvariants seifert_from_json(const Json& j) {
    if (!j.is_object()) throw MalformedInput("seifert invariants: expected object");
    SeifertInvariants inv;
    inv.genus = j.at("g").get<long long>();
    if (inv.genus < 0) throw std::invalid_argument("seifert invariants: genus must be >= 0");
    inv.b = j.at("b").get<long long>();
    for (const Json& s : j.at("slopes")) inv.slopes.push_back(rational_from_json(s));
    inv.normalized = j.value("normalized", false);
    return inv;
}

Json to_json(const Decision& d) {
    Json out{{"verdict", to_string(d.verdict)}, {"rule", d.rule}};
    if (d.witness) {
        out["witness"] = Json{{"a", d.witness->a},
                              {"m", d.witness->m},
                              {"role_indices", {d.witness->role_indices[0], d.witness->role_indices[1]}}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

Json to_json(const ConsistencyReport& r) {
    return Json{{"invariants", to_json(r.invariants)},
                {"reversed", to_json(r.reversed)},
                {"orbifold", to_string(r.orbifold)},
                {"contact_plus", to_json(r.contact_plus)},
                {"contact_minus", to_json(r.contact_minus)},
                {"realizable", to_json(r.realizable)},
                {"pass", r.pass}};
}

Json to_json(const BranchedCoverResult& r) {
    return Json{{"quotient", to_json(r.quotient)},
                {"normalized_quotient", to_json(normalize(r.quotient))},
                {"branch_orders", r.branch_orders},
                {"degree", r.degree}};
}

Json to_json(const BrieskornReport& r) {
    Json covers = Json::object();
    for (const auto& [n, inv] : r.covers) covers[std::to_string(n)] = to_json(inv);
    Json out{{"k", r.k},
             {"invariants", to_json(r.invariants)},
             {"candidates", r.candidates},
             {"necessary_only", r.necessary_only},
             {"covers", covers},
             {"coprime_candidates", r.coprime_candidates},
             {"class_lower_bound", r.class_lower_bound},
             {"heuristic_bound", r.heuristic_bound},
             {"n_max", r.n_max}};
    out["vertical_twisting"] = r.vertical_twisting ? Json(*r.vertical_twisting) : Json(nullptr);
    return out;
}

Json to_json(const LiftedCircleMap& f) {
    switch (f.kind()) {
        case MapKind::rigid:
            return Json{{"kind", "rigid"}, {"c", f.rigid_translation()}};
        case MapKind::mobius: {
            const Mat2& m = f.mobius_matrix();
            return Json{{"kind", "mobius"},
                        {"m", {{m.a, m.b}, {m.c, m.d}}},
                        {"winding", f.mobius_winding()}};
        }
        case MapKind::smooth: {
            const SmoothDisplacement& d = f.smooth_displacement();
            Json out{{"kind", "smooth"},
                     {"fourier_sin", d.sin_coeffs},
                     {"fourier_cos", d.cos_coeffs}};
            if (d.c0 != 0) out["c0"] = d.c0;
            return out;
        }
        case MapKind::composite: {
            Json maps = Json::array();
            for (const LiftedCircleMap& g : f.composite_parts()) maps.push_back(to_json(g));
            return Json{{"kind", "composite"}, {"maps", maps}};
        }
        case MapKind::cover_lift:
            return Json{{"kind", "cover_lift"},
                        {"n", f.cover_degree()},
                        {"base", to_json(f.cover_base())}};
        case MapKind::inverse:
            return Json{{"kind", "inverse"}, {"base", to_json(f.composite_parts().front())}};
    }
    throw std::logic_error("unreachable map kind");
}

LiftedCircleMap map_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw MalformedInput("map: expected object with \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rigid") return LiftedCircleMap::rigid(j.at("c").get<double>());
    if (kind == "mobius") {
        const Json& m = j.at("m");
        if (!m.is_array() || m.size() != 2 || m[0].size() != 2 || m[1].size() != 2)
            throw MalformedInput("map: mobius matrix must be 2x2");
        Mat2 mat{m[0][0].get<double>(), m[0][1].get<double>(), m[1][0].get<double>(),
                 m[1][1].get<double>()};
        return LiftedCircleMap::mobius(mat, j.value("winding", 0));
    }
    if (kind == "smooth") {
        SmoothDisplacement d;
        d.c0 = j.value("c0", 0.0);
        if (j.contains("fourier_sin")) d.sin_coeffs = j.at("fourier_sin").get<std::vector<double>>();
        if (j.contains("fourier_cos")) d.cos_coeffs = j.at("fourier_cos").get<std::vector<double>>();
        return LiftedCircleMap::smooth(d);
    }
    if (kind == "composite") {
        std::vector<LiftedCircleMap> maps;
        for (const Json& mj : j.at("maps")) maps.push_back(map_from_json(mj));
        return LiftedCircleMap::compose(std::move(maps));
    }
    if (kind == "cover_lift")
        return LiftedCircleMap::cover_lift(map_from_json(j.at("base")), j.at("n").get<long long>());
    if (kind == "inverse") return map_from_json(j.at("base")).inverse();
    throw MalformedInput("map: unknown kind \"" + kind + "\"");
}

Json to_json(const SurfaceGroupRep& rep) {
    Json gens = Json::array();
    for (const LiftedCircleMap& g : rep.generators) gens.push_back(to_json(g));
    return Json{{"genus", rep.genus},
                {"generators", gens},
                {"relation_residual", rep.relation_residual}};
}

SurfaceGroupRep rep_from_json(const Json& j) {
    SurfaceGroupRep rep;
    rep.genus = j.at("genus").get<long long>();
    for (const Json& gj : j.at("generators")) rep.generators.push_back(map_from_json(gj));
    if (rep.generators.size() != static_cast<size_t>(2 * rep.genus))
        throw MalformedInput("representation: expected 2g generators");
    rep.relation_residual = relation_residual(rep);
    return rep;
}

Json to_json(const TranslationEstimate& t) {
    return Json{{"estimate", t.estimate}, {"error_bound", t.error_bound}, {"exact", t.exact}};
}

Json to_json(const StabilityReport& r) {
    Json items = Json::array();
    for (const StabilityItem& it : r.items)
        items.push_back(Json{{"label", it.label},
                             {"rot_original", it.rot_original},
                             {"rot_conjugated", it.rot_conjugated},
                             {"discrepancy", it.discrepancy}});
    return Json{{"items", items},
                {"max_discrepancy", r.max_discrepancy},
                {"threshold", r.threshold},
                {"pass", r.pass}};
}

Json to_json(const ClassifyResult& r) {
    auto vec = [](const Vec3& p) { return Json{{"x", p.x}, {"y", p.y}, {"z", p.z}}; };
    return Json{{"classification", to_string(r.cls)}, {"min", r.min},       {"max", r.max},
                {"argmin", vec(r.argmin)},            {"argmax", vec(r.argmax)},
                {"points", r.points}};
}

}  // namespace folcalc
