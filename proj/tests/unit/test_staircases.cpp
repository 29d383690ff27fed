#include "stair/error.hpp"
#include "stair/families.hpp"
#include "stair/staircases.hpp"

#include <doctest.h>

using namespace stair;

TEST_SUITE("staircases") {

TEST_CASE("family lookup") {
    CHECK(family_by_name("(3)").id == CaseId::ball);
    CHECK(family_by_name("3;1^4").id == CaseId::b1111);
    CHECK(family_by_name("4;2,2").id == CaseId::p422);
    CHECK_THROWS_AS(family_by_name("(4;2,1)"), DomainError);
    CHECK_THROWS_AS(family_by_name("nonsense"), DomainError);
    CHECK(all_families().size() == 6);
    CHECK(find_family(NegativeWeightExpansion::parse("4;2,1")) == nullptr);
}

TEST_CASE("seeds and the recurrence") {
    const std::pair<CaseId, std::vector<long>> seeds[] = {
        {CaseId::ball, {2, 1, 1, 2}},         {CaseId::p422, {1, 1, 1, 3}},
        {CaseId::b111, {1, 1, 1, 2}},         {CaseId::b1111, {1, 2, 1, 3}},
        {CaseId::b1, {1, 1, 1, 1, 2, 4}},     {CaseId::b11, {1, 1, 1, 1, 2, 3}},
    };
    for (const auto& [id, s] : seeds) {
        const auto& f = family(id);
        CAPTURE(f.name);
        CHECK(f.seeds == s);
        CHECK(Rational(f.K) == f.expansion.K());
        for (long n = 0; n <= 60; ++n) CHECK(f.g(n + 2 * f.J) == f.K * f.g(n + f.J) - f.g(n));
    }
}

TEST_CASE("corner formulas for the ball") {
    const auto c = corners(family(CaseId::ball), 2);
    CHECK(c.outer.x == 5);
    CHECK(c.inner.x == make_rational(25, 4));
    CHECK(c.outer.y == make_rational(5, 6));
    CHECK(c.inner.y == make_rational(5, 6));
    CHECK(c.inner.kind == CornerKind::inner);
}

TEST_CASE("identities, constant tables and structure") {
    for (const auto* f : all_families()) {
        std::string diag;
        CHECK_MESSAGE(verify_identities(*f, 80, &diag), diag);
        CHECK_MESSAGE(verify_constant_tables(*f, &diag), diag);
        CHECK_MESSAGE(verify_structure(*f, 25, make_rational(1, 100000000), &diag), diag);
    }
}

TEST_CASE("staircase graph is continuous, nondecreasing and hits its corners") {
    for (const auto* f : all_families()) {
        CAPTURE(f->name);
        const auto g = staircase_graph(*f);
        const auto cs = g.corners_up_to(corners(*f, 4).inner.x);
        for (const auto& c : cs) CHECK(g.evaluate(c.x) == c.y);
        Rational prev = -1;
        const Rational lo = cs.front().x, hi = cs.back().x, step = (hi - lo) / 400;
        for (Rational a = lo; a <= hi; a += step) {
            const Rational v = g.evaluate(a);
            CHECK(v >= prev);
            prev = v;
        }
    }
    CHECK_THROWS_AS(staircase_graph(family(CaseId::ball)).evaluate(7), DomainError);
}

TEST_CASE("outer corner obstruction for small n") {
    for (const auto* f : all_families()) {
        for (long n = 0; n <= 4; ++n) {
            const auto r = verify_outer_obstruction(*f, n);
            CHECK_MESSAGE(r.ok, f->name << " n=" << n << ": " << r.diagnostic);
            CHECK(r.below <= r.k_n);
        }
    }
    const auto r = verify_outer_obstruction(family(CaseId::ball), 1);
    CHECK(r.k_n == 2);
    REQUIRE(r.ratio);
    CHECK(*r.ratio == make_rational(2, 3));
}

}
