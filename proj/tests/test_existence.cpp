#include <folcalc/enumerate.hpp>
#include <folcalc/existence.hpp>

#include <doctest.h>

using namespace folcalc;

namespace {

SeifertInvariants norm(long long g, long long b, std::vector<Rational> slopes) {
    SeifertInvariants inv;
    inv.genus = g;
    inv.b = b;
    inv.slopes = std::move(slopes);
    return normalize(inv);
}

}  // namespace

TEST_CASE("psl2r horizontal foliation, positive genus") {
    CHECK(has_psl2r_horizontal_foliation(norm(1, 0, {})).yes());
    CHECK(has_psl2r_horizontal_foliation(norm(1, 1, {})).verdict == Verdict::no);
    CHECK(has_psl2r_horizontal_foliation(norm(2, -2, {{1, 2}})).yes());
}

TEST_CASE("psl2r horizontal foliation, genus zero") {
    const Decision yes = has_psl2r_horizontal_foliation(norm(0, -1, {{1, 2}, {1, 3}, {1, 11}}));
    CHECK(yes.yes());
    CHECK(yes.rule == "genus_zero_foliation.sum_low");

    CHECK(has_psl2r_horizontal_foliation(norm(0, -2, {{1, 2}, {2, 3}, {9, 11}})).verdict ==
          Verdict::no);

    // the b = 1-r mirror branch
    CHECK(has_psl2r_horizontal_foliation(norm(0, -2, {{1, 2}, {2, 3}, {10, 11}})).yes());

    // r <= 2 is outside the criterion
    CHECK(has_psl2r_horizontal_foliation(norm(0, -1, {{1, 2}})).verdict == Verdict::unknown);

    // strictness flag separates the boundary case sum = 1
    const auto boundary = norm(0, -1, {{1, 3}, {1, 3}, {1, 3}});
    CHECK(has_psl2r_horizontal_foliation(boundary, false).yes());
    CHECK(has_psl2r_horizontal_foliation(boundary, true).verdict == Verdict::no);
}

TEST_CASE("witness search") {
    const auto w = search_realizability_witness({{1, 2}, {2, 3}, {9, 11}});
    REQUIRE(w.has_value());
    CHECK(w->a == 3);
    CHECK(w->m == 5);

    CHECK_FALSE(search_realizability_witness({{1, 2}, {1, 2}, {1, 2}}).has_value());
    CHECK_THROWS_AS(search_realizability_witness({{1, 2}}), std::invalid_argument);
}

TEST_CASE("horizontal contact") {
    const Decision d = has_horizontal_contact(norm(0, -2, {{1, 2}, {2, 3}, {9, 11}}));
    CHECK(d.yes());
    CHECK(d.rule == "transverse_contact.witness");
    REQUIRE(d.witness.has_value());
    CHECK(d.witness->a == 3);
    CHECK(d.witness->m == 5);

    CHECK(has_horizontal_contact(norm(1, 0, {})).rule == "transverse_contact.genus_bound");
    CHECK(has_horizontal_contact(norm(0, 3, {})).yes());
    CHECK(has_horizontal_contact(norm(0, 1, {})).rule == "transverse_contact.small_base");
    CHECK(has_horizontal_contact(norm(0, -1, {})).verdict == Verdict::no);
    CHECK(has_horizontal_contact(norm(0, -2, {{1, 2}, {1, 2}, {1, 2}})).verdict == Verdict::no);
}

TEST_CASE("witness search with four exceptional fibers") {
    // the two smallest slopes take the a-roles; both larger slopes must
    // clear the (m-1)/m threshold
    const auto w = search_realizability_witness({{3, 4}, {4, 5}, {5, 6}, {9, 11}});
    REQUIRE(w.has_value());
    CHECK(w->m == 2);
    CHECK(w->a == 1);
    const Decision d = has_horizontal_contact(norm(0, -3, {{3, 4}, {4, 5}, {5, 6}, {9, 11}}));
    CHECK(d.yes());
    CHECK(d.rule == "transverse_contact.witness");
}

TEST_CASE("realizable") {
    CHECK(is_realizable(norm(0, -2, {{1, 2}, {2, 3}, {9, 11}})).yes());
    CHECK(is_realizable(norm(0, -2, {{1, 2}, {1, 2}, {1, 2}})).verdict == Verdict::no);

    // reversed-orientation branch at b = -1
    const Decision rev = is_realizable(norm(0, -1, {{2, 11}, {1, 3}, {1, 2}}));
    CHECK(rev.yes());
    CHECK(rev.rule == "realizable.reversed");

    CHECK_THROWS_AS(is_realizable(norm(1, -2, {{1, 2}, {1, 2}, {1, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(is_realizable(norm(0, -1, {{1, 2}})), std::invalid_argument);
}

TEST_CASE("witness search terminates and stays fast on large denominators") {
    // all slopes close to 1: the m-range is wide but the first admissible
    // pair appears immediately
    const auto w = search_realizability_witness(
        {{500001, 1000000}, {500001, 1000000}, {999999, 1000000}});
    REQUIRE(w.has_value());
    CHECK(w->m == 2);
    CHECK(w->a == 1);

    // sum of the two role slopes exactly 1: rejected without any search
    CHECK_FALSE(search_realizability_witness({{1, 2}, {1, 2}, {999999, 1000000}}).has_value());

    // near-integral non-role slope: the m-range collapses to nothing
    CHECK_FALSE(search_realizability_witness({{2, 3}, {3, 4}, {1, 2}}).has_value());
}

TEST_CASE("cross check examples") {
    const auto r1 = cross_check_existence(norm(0, -2, {{1, 2}, {2, 3}, {9, 11}}));
    CHECK(r1.pass);
    CHECK(r1.contact_plus.yes());
    CHECK(r1.contact_minus.yes());
    CHECK(r1.contact_minus.rule == "transverse_contact.genus_bound");
    CHECK(r1.realizable.yes());

    const auto r2 = cross_check_existence(norm(0, -2, {{1, 2}, {1, 2}, {1, 2}}));
    CHECK(r2.pass);
    CHECK(r2.orbifold == OrbifoldType::spherical);
    CHECK(r2.realizable.verdict == Verdict::no);
    CHECK_FALSE((r2.contact_plus.yes() && r2.contact_minus.yes()));

    CHECK_THROWS_AS(cross_check_existence(norm(1, -2, {{1, 2}, {1, 2}, {1, 2}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(cross_check_existence(norm(0, -2, {{1, 2}, {1, 2}})),
                    std::invalid_argument);
}

TEST_CASE("consistency sweep on denominators <= 5") {
    EnumerationBounds bounds;
    bounds.max_denominator = 5;
    bounds.b_min = -4;
    bounds.b_max = 4;
    bounds.fiber_count = 3;
    bounds.orbifold_filter = OrbifoldType::hyperbolic;
    int checked = 0;
    enumerate_seifert(bounds, [&](const SeifertInvariants& inv) {
        const ConsistencyReport rep = cross_check_existence(inv);
        CHECK(rep.pass);
        const Decision r = is_realizable(inv);
        const Decision rbar = is_realizable(reverse_orientation(inv));
        CHECK(r.yes() == rbar.yes());
        const Decision psl = has_psl2r_horizontal_foliation(inv);
        if (psl.yes()) CHECK(r.yes());
        ++checked;
    });
    CHECK(checked > 1000);
}
