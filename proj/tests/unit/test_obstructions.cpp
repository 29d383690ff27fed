#include "generators.hpp"

#include "stair/error.hpp"
#include "stair/families.hpp"
#include "stair/obstructions.hpp"
#include "stair/staircases.hpp"

#include <doctest.h>

using namespace stair;

TEST_SUITE("obstructions") {

TEST_CASE("class conditions") {
    ObstructiveClass e{1, {}, {1, 1}};
    CHECK(e.satisfies_conditions());
    CHECK(e.length() == 2);
    ObstructiveClass bad{2, {}, {1, 1}};
    CHECK_FALSE(bad.satisfies_conditions());
    ObstructiveClass with_tilde{2, {1}, {1, 1, 1, 1}};
    CHECK(with_tilde.satisfies_conditions());
}

TEST_CASE("enumerated classes are ordered, valid and usable") {
    for (const char* name : {"3", "4;2,1", "3;1,1"}) {
        const auto X = NegativeWeightExpansion::parse(name);
        const auto classes = enumerate_classes(X, 6);
        REQUIRE_FALSE(classes.empty());
        for (std::size_t i = 0; i < classes.size(); ++i) {
            const auto& c = classes[i];
            CHECK(c.satisfies_conditions());
            CHECK(class_denominator(c, X) > 0);
            CHECK(std::is_sorted(c.m.rbegin(), c.m.rend()));
            CHECK(c.d <= 6);
            if (i > 0) CHECK(classes[i - 1].d <= c.d);
        }
    }
}

TEST_CASE("mu never exceeds the degree bound") {
    const auto X = NegativeWeightExpansion::parse("4;2,1");
    const auto classes = enumerate_classes(X, 7);
    for (int i = 0; i < 40; ++i) {
        const Rational a = stair::testing::random_rational(1, 7, 40);
        for (const auto& c : classes) {
            const auto bound = degree_bound(X, c.d, a);
            if (!bound) continue;
            CHECK(QuadraticSurd(mu(c, X, a)) <= *bound);
        }
    }
}

TEST_CASE("exact values match the staircase graph of the ball family at its corners") {
    const auto& fam = family(CaseId::ball);
    const auto g = staircase_graph(fam);
    for (const auto& c : g.corners_up_to(make_rational(25, 4))) {
        // degree 12 reaches the classes of the corners up to 25/4
        if (c.x < 1 || c.x > make_rational(25, 4)) continue;
        const auto v = exact_c_at(fam.expansion, c.x, 12);
        CAPTURE(to_string(c.x));
        CHECK(v.value == QuadraticSurd(c.y));
        // inner corners lie on the volume curve, where the degree bound gives nothing
        CHECK(v.exact == v.cls.has_value());
        CHECK(v.cls.has_value() == (c.kind == CornerKind::outer));
    }
}

TEST_CASE("volume curve") {
    const auto X = NegativeWeightExpansion::parse("3");
    CHECK(volume_curve(X, 9) == QuadraticSurd(1));
    CHECK(volume_curve(X, 2) == sqrt(make_rational(2, 9)));
}

TEST_CASE("nonpositive denominators are rejected") {
    const auto X = NegativeWeightExpansion::parse("4;2,1");
    ObstructiveClass c{1, {2, 0}, {}};  // 4 - 4 - 0
    CHECK(class_denominator(c, X) == 0);
    CHECK_THROWS_AS(mu(c, X, 2), DomainError);
}

}
