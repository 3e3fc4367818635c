// folcalc: JSON in, JSON out, for Seifert-invariant arithmetic, existence
// criteria, circle-map dynamics and 1-form model verification.
//
// Exit codes: 0 success, 1 domain error (precondition violation),
// 2 malformed input.

#include <folcalc/enumerate.hpp>
#include <folcalc/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

namespace {

using folcalc::Json;

std::string read_all(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// inline JSON wins over a file path; otherwise read stdin
Json load_input(const std::string& inline_json, const std::string& path) {
    if (!inline_json.empty()) return folcalc::parse_json(inline_json);
    if (!path.empty()) {
        std::ifstream f(path);
        if (!f) throw folcalc::MalformedInput("cannot open input file: " + path);
        return folcalc::parse_json(read_all(f));
    }
    return folcalc::parse_json(read_all(std::cin));
}

void print_table(const Json& j, std::ostream& os, const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            const std::string name = prefix.empty() ? key : prefix + "." + key;
            if (value.is_object() || value.is_array())
                print_table(value, os, name);
            else
                os << name << "\t" << value.dump() << "\n";
        }
    } else if (j.is_array()) {
        size_t i = 0;
        for (const Json& value : j) {
            const std::string name = prefix + "[" + std::to_string(i++) + "]";
            if (value.is_object() || value.is_array())
                print_table(value, os, name);
            else
                os << name << "\t" << value.dump() << "\n";
        }
    } else {
        os << prefix << "\t" << j.dump() << "\n";
    }
}

void emit(const Json& j, bool table) {
    if (table)
        print_table(j, std::cout);
    else
        std::cout << j.dump() << "\n";
}

folcalc::LiftedCircleMap map_from_option(const std::string& text) {
    return folcalc::map_from_json(folcalc::parse_json(text));
}

folcalc::LiftedCircleMap random_smooth_map(unsigned seed, double amplitude) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    folcalc::SmoothDisplacement d;
    d.c0 = 0.3 * unit(rng);
    for (int k = 1; k <= 3; ++k) {
        // keep 1 + d' > 0 with margin: sum of 2 pi k |coeff| stays below 1/2
        const double scale = amplitude / (2 * 3.14159265358979323846 * k * 6);
        d.sin_coeffs.push_back(scale * unit(rng));
        d.cos_coeffs.push_back(scale * unit(rng));
    }
    return folcalc::LiftedCircleMap::smooth(d);
}

}  // namespace

int main(int argc, char** argv) {
    using namespace folcalc;

    CLI::App app{"Seifert-invariant arithmetic, horizontal existence criteria, "
                 "circle dynamics and confoliation form checks"};
    app.require_subcommand(1);
    bool table = false;
    std::string format = "json";
    app.add_option("--format", format, "output format: json|table")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_flag("--format-table,--table", table, "shorthand for --format table");

    std::string in_json, in_path;
    auto add_inv_options = [&](CLI::App* cmd) {
        cmd->add_option("--json", in_json, "inline invariants JSON");
        cmd->add_option("--in", in_path, "path to invariants JSON (default: stdin)");
    };

    auto* cmd_normalize = app.add_subcommand("normalize", "put invariants in normal form");
    add_inv_options(cmd_normalize);
    auto* cmd_reverse = app.add_subcommand("reverse", "invariants of the reversed orientation");
    add_inv_options(cmd_reverse);
    auto* cmd_euler = app.add_subcommand("euler", "rational Euler number -(b + sum slopes)");
    add_inv_options(cmd_euler);
    auto* cmd_orbifold = app.add_subcommand("orbifold", "base-orbifold type from chi^orb");
    add_inv_options(cmd_orbifold);

    auto* cmd_exists = app.add_subcommand("exists", "existence criteria");
    cmd_exists->require_subcommand(1);
    bool strict_sum = false;
    auto* ex_fol = cmd_exists->add_subcommand("hor-foliation", "horizontal foliation with PSL(2,R) holonomy");
    ex_fol->add_flag("--strict-sum", strict_sum, "strict slope-sum comparisons in the genus-zero clauses");
    add_inv_options(ex_fol);
    auto* ex_con = cmd_exists->add_subcommand("hor-contact", "positive contact structure transverse to the fibers");
    add_inv_options(ex_con);
    auto* ex_real = cmd_exists->add_subcommand("realizable", "realizability of genus-zero invariants");
    add_inv_options(ex_real);

    auto* cmd_cross = app.add_subcommand("crosscheck", "contact-in-both-orientations vs realizable");
    add_inv_options(cmd_cross);

    auto* cmd_cover = app.add_subcommand("cover", "fiberwise branched cover quotient");
    long long cover_n = 1;
    cmd_cover->add_option("--n", cover_n, "cover degree")->required();
    add_inv_options(cmd_cover);

    auto* cmd_twist = app.add_subcommand("twisting", "twisting-number candidates (necessary condition)");
    long long twist_max = 60;
    cmd_twist->add_option("--n-max", twist_max, "search bound");
    add_inv_options(cmd_twist);

    auto* cmd_brieskorn = app.add_subcommand("brieskorn", "Brieskorn family report");
    long long bk_k = 2, bk_nmax = 0;
    cmd_brieskorn->add_option("--k", bk_k, "family parameter k")->required();
    cmd_brieskorn->add_option("--n-max", bk_nmax, "search bound (default 12k)");

    auto* cmd_comp = app.add_subcommand("components", "representation-space component lower bound");
    long long comp_g = 2, comp_e = 1;
    cmd_comp->add_option("--genus", comp_g)->required();
    cmd_comp->add_option("--euler", comp_e)->required();

    std::string map_text, map2_text, rep_text, h_text;
    long long iters = 10000;
    auto* cmd_trnum = app.add_subcommand("trnum", "translation number of a lifted map");
    cmd_trnum->add_option("--map", map_text, "map JSON")->required();
    cmd_trnum->add_option("--iters", iters, "iteration count");
    auto* cmd_rotnum = app.add_subcommand("rotnum", "rotation number (translation number mod 1)");
    cmd_rotnum->add_option("--map", map_text, "map JSON")->required();
    cmd_rotnum->add_option("--iters", iters, "iteration count");

    auto* cmd_coverlift = app.add_subcommand("cover-lift", "n-fold fiberwise cover lift of a map");
    long long lift_n = 2;
    cmd_coverlift->add_option("--map", map_text, "map JSON")->required();
    cmd_coverlift->add_option("--n", lift_n, "cover degree");
    cmd_coverlift->add_option("--iters", iters, "iteration count");

    auto* cmd_fuchsian = app.add_subcommand("fuchsian", "regular 4g-gon side-pairing representation");
    long long fuch_g = 2;
    cmd_fuchsian->add_option("--genus", fuch_g, "genus (>= 2)");

    auto* cmd_euler_class = app.add_subcommand("euler-class", "Euler class of a representation");
    int samples = 64;
    cmd_euler_class->add_option("--rep", rep_text, "representation JSON")->required();
    cmd_euler_class->add_option("--samples", samples, "evaluation points");

    auto* cmd_defect = app.add_subcommand("defect", "translation-number cocycle defect");
    cmd_defect->add_option("--map1", map_text, "first map JSON")->required();
    cmd_defect->add_option("--map2", map2_text, "second map JSON")->required();
    cmd_defect->add_option("--iters", iters, "iteration count");

    auto* cmd_stability = app.add_subcommand("stability", "rotation numbers under conjugation");
    unsigned stab_seed = 1;
    std::string words_text;
    cmd_stability->add_option("--rep", rep_text, "representation JSON (default: fuchsian genus 2)");
    cmd_stability->add_option("--conj", h_text, "conjugating map JSON (default: random smooth, see --seed)");
    cmd_stability->add_option("--seed", stab_seed, "seed for the random conjugator");
    cmd_stability->add_option("--words", words_text, "JSON array of words (letters +-k)");
    cmd_stability->add_option("--iters", iters, "iteration count");

    auto* cmd_forms = app.add_subcommand("forms", "1-form model verification");
    cmd_forms->require_subcommand(1);
    auto* forms_check = cmd_forms->add_subcommand("check", "classify a model by the sign of wedge_self");
    std::string model = "reeb";
    int grid = 64;
    double tval = 0.1, tol = 1e-9;
    double am = 1, bm = 0, ap = 1, bp = 0, c1 = 1, c2 = 0;
    int nf_n = 1;
    forms_check->add_option("--model", model, "reeb|spiral|deformation|normal-form")->required();
    forms_check->add_option("--grid", grid, "grid resolution per axis");
    forms_check->add_option("--t", tval, "deformation parameter");
    forms_check->add_option("--tol", tol, "sign tolerance");
    forms_check->add_option("--a-minus", am, "spiral boundary form dx coefficient, negative side");
    forms_check->add_option("--b-minus", bm, "spiral boundary form dy coefficient, negative side");
    forms_check->add_option("--a-plus", ap, "spiral boundary form dx coefficient, positive side");
    forms_check->add_option("--b-plus", bp, "spiral boundary form dy coefficient, positive side");
    forms_check->add_option("--n", nf_n, "normal-form covering degree");
    forms_check->add_option("--c1", c1, "normal-form lambda dx coefficient");
    forms_check->add_option("--c2", c2, "normal-form lambda dz coefficient");

    auto* cmd_enum = app.add_subcommand("enumerate", "normalized tuples within bounds (JSON lines)");
    EnumerationBounds bounds;
    std::string orb_filter;
    cmd_enum->add_option("--max-den", bounds.max_denominator, "max slope denominator")->required();
    cmd_enum->add_option("--b-min", bounds.b_min)->required();
    cmd_enum->add_option("--b-max", bounds.b_max)->required();
    cmd_enum->add_option("--r", bounds.fiber_count, "number of exceptional fibers");
    cmd_enum->add_option("--orbifold", orb_filter, "filter: spherical|euclidean|hyperbolic");

    // allow --format-table after any subcommand
    for (CLI::App* sub : app.get_subcommands({})) {
        sub->fallthrough(true);
        for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough(true);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (format == "table") table = true;

    try {
        auto invariants = [&]() { return seifert_from_json(load_input(in_json, in_path)); };

        if (*cmd_normalize) {
            emit(to_json(normalize(invariants())), table);
        } else if (*cmd_reverse) {
            emit(to_json(reverse_orientation(invariants())), table);
        } else if (*cmd_euler) {
            Json out = to_json(euler_number(invariants()));
            out["exact"] = true;
            emit(out, table);
        } else if (*cmd_orbifold) {
            const SeifertInvariants inv = invariants();
            Json out{{"type", to_string(base_orbifold_type(inv))},
                     {"chi_orb", to_json(orbifold_euler_characteristic(inv))},
                     {"exact", true}};
            emit(out, table);
        } else if (*ex_fol) {
            emit(to_json(has_psl2r_horizontal_foliation(invariants(), strict_sum)), table);
        } else if (*ex_con) {
            emit(to_json(has_horizontal_contact(invariants())), table);
        } else if (*ex_real) {
            emit(to_json(is_realizable(invariants())), table);
        } else if (*cmd_cross) {
            emit(to_json(cross_check_existence(invariants())), table);
        } else if (*cmd_cover) {
            emit(to_json(fiberwise_branched_cover(invariants(), cover_n)), table);
        } else if (*cmd_twist) {
            Json out{{"candidates", twisting_candidates(invariants(), twist_max)},
                     {"necessary_only", true},
                     {"n_max", twist_max}};
            emit(out, table);
        } else if (*cmd_brieskorn) {
            emit(to_json(brieskorn_report(bk_k, bk_nmax)), table);
        } else if (*cmd_comp) {
            Json out{{"lower_bound", to_json(component_lower_bound(comp_g, comp_e))},
                     {"exact", true}};
            emit(out, table);
        } else if (*cmd_trnum) {
            emit(to_json(translation_number(map_from_option(map_text), iters)), table);
        } else if (*cmd_rotnum) {
            emit(to_json(rotation_number(map_from_option(map_text), iters)), table);
        } else if (*cmd_coverlift) {
            const LiftedCircleMap base = map_from_option(map_text);
            const LiftedCircleMap lifted = LiftedCircleMap::cover_lift(base, lift_n);
            double dev = 0;
            for (int i = 0; i <= 100; ++i) {
                const double x = static_cast<double>(i) / 100;
                dev = std::max(dev, std::fabs(lifted(x + 1.0 / lift_n) - lifted(x) - 1.0 / lift_n));
            }
            Json out{{"map", to_json(lifted)},
                     {"trnum", to_json(translation_number(lifted, iters))},
                     {"equivariance_max_dev", dev}};
            emit(out, table);
        } else if (*cmd_fuchsian) {
            emit(to_json(fuchsian_generators(fuch_g)), table);
        } else if (*cmd_euler_class) {
            const SurfaceGroupRep rep = rep_from_json(folcalc::parse_json(rep_text));
            Json out{{"euler_class", euler_class(rep, samples)},
                     {"relation_residual", rep.relation_residual},
                     {"exact", true}};
            emit(out, table);
        } else if (*cmd_defect) {
            emit(to_json(matsumoto_defect(map_from_option(map_text), map_from_option(map2_text),
                                          iters)),
                 table);
        } else if (*cmd_stability) {
            const SurfaceGroupRep rep =
                rep_text.empty() ? fuchsian_generators(2) : rep_from_json(folcalc::parse_json(rep_text));
            const LiftedCircleMap h =
                h_text.empty() ? random_smooth_map(stab_seed, 0.5) : map_from_option(h_text);
            std::vector<std::vector<int>> words;
            if (!words_text.empty())
                words = folcalc::parse_json(words_text).get<std::vector<std::vector<int>>>();
            emit(to_json(stability_experiment(rep, h, iters, words)), table);
        } else if (*forms_check) {
            OneFormField field;
            if (model == "reeb")
                field = build_reeb();
            else if (model == "spiral")
                field = build_spiral(am, bm, ap, bp);
            else if (model == "deformation")
                field = build_deformation(tval);
            else if (model == "normal-form" || model == "normal_form")
                field = build_normal_form(nf_n, c1, c2);
            else
                throw MalformedInput("unknown model: " + model);
            Json out = to_json(classify(field, grid, tol));
            out["model"] = field.name;
            emit(out, table);
        } else if (*cmd_enum) {
            if (!orb_filter.empty()) {
                if (orb_filter == "spherical") bounds.orbifold_filter = OrbifoldType::spherical;
                else if (orb_filter == "euclidean") bounds.orbifold_filter = OrbifoldType::euclidean;
                else if (orb_filter == "hyperbolic") bounds.orbifold_filter = OrbifoldType::hyperbolic;
                else throw MalformedInput("unknown orbifold filter: " + orb_filter);
            }
            enumerate_seifert(bounds, [&](const SeifertInvariants& inv) {
                std::cout << to_json(inv).dump() << "\n";
            });
        }
        return 0;
    } catch (const MalformedInput& e) {
        std::cout << Json{{"error", e.what()}}.dump() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cout << Json{{"error", std::string("malformed input: ") + e.what()}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    }
}
