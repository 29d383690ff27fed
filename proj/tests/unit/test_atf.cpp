#include "stair/atf.hpp"
#include "stair/error.hpp"
#include "stair/families.hpp"

#include <doctest.h>

using namespace stair;

namespace {

BaseDiagram triangle(long a) { return {{RPoint(0, 0), RPoint(a, 0), RPoint(0, a)}, {}}; }

}  // namespace

TEST_SUITE("atf") {

TEST_CASE("nodal trade adds a one-node ray along the corner bisector") {
    const auto d = nodal_trade(triangle(3), 0);
    REQUIRE(d.rays.size() == 1);
    CHECK(d.rays[0].direction == IVec(1, 1));
    CHECK(d.rays[0].nodes == 1);
    CHECK(d.total_nodes() == 1);
    CHECK(d.area() == make_rational(9, 2));
    const auto e = nodal_trade(d, 1);
    CHECK(e.rays[1].direction == IVec(-2, 1));
    CHECK_THROWS_AS(nodal_trade(d, 0), DomainError);
}

TEST_CASE("mutation preserves area and fixes the ray") {
    auto d = nodal_trade(nodal_trade(triangle(3), 1), 2);
    for (std::size_t r = 0; r < d.rays.size(); ++r) {
        for (auto side : {MutationSide::ccw, MutationSide::cw}) {
            const auto m = mutate(d, r, side);
            CHECK(m.result.area() == d.area());
            CHECK(m.shear.det() == 1);
            CHECK(m.shear * d.rays[r].direction == d.rays[r].direction);
            CHECK(m.result.total_nodes() == d.total_nodes());
            CHECK_NOTHROW(m.result.validate());
        }
    }
    CHECK_THROWS_AS(mutate(d, 7, MutationSide::cw), DomainError);
}

TEST_CASE("first recursion step for the ball") {
    const auto s0 = initial_state(CaseId::ball);
    const auto step = recursion_step(s0);
    CHECK(step.items_checked == 9);
    CHECK(step.shear == IMat2{-1, -1, 4, 3});
    CHECK(step.next.diagram.polygon == std::vector<RPoint>{{0, 0}, {make_rational(3, 2), 0}, {0, 6}});
}

TEST_CASE("toric blowup removes a corner triangle") {
    const auto d = toric_blowup(triangle(3), 0, 1);
    CHECK(d.area() == make_rational(9, 2) - make_rational(1, 2));
    CHECK(d.polygon.size() == 4);
    CHECK_THROWS_AS(toric_blowup(triangle(3), 0, 3), DomainError);
}

TEST_CASE("lattice equivalence") {
    const BaseDiagram a = triangle(2);
    BaseDiagram b{{RPoint(1, 1), RPoint(3, 1), RPoint(1, 3)}, {}};
    CHECK(lattice_equivalent(a, b));
    // image under a shear
    BaseDiagram c{{RPoint(0, 0), RPoint(2, 0), RPoint(2, 2)}, {}};
    CHECK(lattice_equivalent(a, c));
    BaseDiagram e{{RPoint(0, 0), RPoint(3, 0), RPoint(0, 2)}, {}};
    CHECK_FALSE(lattice_equivalent(a, e));
    CHECK_FALSE(lattice_equivalent(nodal_trade(a, 0), a));
}

TEST_CASE("pregame scripts reach the recursion seeds") {
    for (const auto* f : all_families()) {
        CAPTURE(f->name);
        const auto script = pregame_script(f->id);
        const auto ds = replay(script);
        CHECK(ds.size() == script.moves.size() + 1);
        CHECK(lattice_equivalent(ds.back(), script.expected));
        for (std::size_t i = 0; i < script.moves.size(); ++i) {
            const auto& mv = script.moves[i];
            const Rational lost = mv.kind == PregameMove::Kind::blowup ? mv.size * mv.size / 2 : Rational(0);
            CHECK(ds[i + 1].area() == ds[i].area() - lost);
        }
        CHECK_NOTHROW(pregame(f->id));
    }
}

TEST_CASE("recursion data agree with the closed forms") {
    for (const auto* f : all_families()) {
        CAPTURE(f->name);
        const auto run = run_recursion(f->id, 8);
        CHECK(run.items_checked == 8 * (f->J == 2 ? 9 : 12));
        for (const auto& s : run.states) {
            CHECK(same_data(s, closed_form_state(*f, s.n)));
            CHECK(contains_ellipsoid_triangle(s));
            CHECK(fills_with_ellipsoid_triangle(s) == (f->J == 2));
        }
        for (std::size_t i = 0; i < run.shears.size(); ++i)
            CHECK(run.shears[i] == closed_form_matrix(*f, static_cast<long>(i)));
    }
}

TEST_CASE("svg output") {
    const auto svg = to_svg(nodal_trade(triangle(3), 0));
    CHECK(svg.find("<svg") != std::string::npos);
}

}
