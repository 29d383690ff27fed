#include "generators.hpp"

#include "stair/error.hpp"
#include "stair/expansion.hpp"
#include "stair/geometry.hpp"
#include "stair/rational.hpp"
#include "stair/surd.hpp"
#include "stair/weights.hpp"

#include <doctest.h>

#include <cmath>

using namespace stair;
using stair::testing::random_rational;
using stair::testing::uniform;

TEST_SUITE("core") {

TEST_CASE("rationals parse from fractions, integers and decimals") {
    CHECK(parse_rational("25/4") == make_rational(25, 4));
    CHECK(parse_rational("4/6") == make_rational(2, 3));
    CHECK(parse_rational("6.9") == make_rational(69, 10));
    CHECK(parse_rational("-0.25") == make_rational(-1, 4));
    CHECK(parse_rational(" 7 ") == 7);
    CHECK_THROWS_AS(parse_rational("x"), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("rationals print exactly and as decimals") {
    CHECK(to_string(make_rational(6, 3)) == "2");
    CHECK(to_string(make_rational(-3, 9)) == "-1/3");
    CHECK(to_decimal(make_rational(1, 3), 5) == "0.33333");
    CHECK(to_decimal(make_rational(5, 6), 20) == "0.83333333333333333333");
    CHECK(to_decimal(make_rational(2, 3), 3) == "0.667");
    CHECK(to_decimal(make_rational(1, 80), 3) == "0.0125");
    CHECK(to_decimal(Rational(0)) == "0");
}

TEST_CASE("floor, ceil and isqrt") {
    CHECK(floor(make_rational(-7, 2)) == -4);
    CHECK(ceil(make_rational(-7, 2)) == -3);
    CHECK(floor(make_rational(7, 2)) == 3);
    CHECK(isqrt(Integer(99)) == 9);
    CHECK(isqrt(Integer(100)) == 10);
    CHECK_THROWS_AS(isqrt(Integer(-1)), DomainError);
}

TEST_CASE("surd arithmetic stays in one field") {
    const QuadraticSurd r5 = sqrt(Rational(5));
    const QuadraticSurd phi = (QuadraticSurd(1) + r5) / QuadraticSurd(2);
    CHECK(phi * phi == phi + QuadraticSurd(1));
    CHECK(phi.norm() == -1);
    CHECK(phi.conjugate() == (QuadraticSurd(1) - r5) / QuadraticSurd(2));
    CHECK(sqrt(Rational(8)) == QuadraticSurd(0, 2, 2));
    CHECK(sqrt(make_rational(9, 4)).is_rational());
    CHECK(phi.to_string() == "(1+sqrt(5))/2");
    CHECK_THROWS_AS(phi + sqrt(Rational(2)), DomainError);
    CHECK_THROWS_AS(phi.to_rational(), DomainError);
}

TEST_CASE("surd floor, comparison and decimals") {
    CHECK(floor(QuadraticSurd(0, 3, 2)) == 4);
    CHECK(floor(-QuadraticSurd(0, 3, 2)) == -5);
    CHECK(ceil(QuadraticSurd(0, 3, 2)) == 5);
    CHECK(QuadraticSurd(0, 1, 2) < QuadraticSurd(make_rational(17, 12)));
    CHECK(QuadraticSurd(0, 1, 2) > QuadraticSurd(make_rational(7, 5)));
    CHECK(to_fixed(sqrt(Rational(2)), 5) == "1.41421");
    CHECK(to_decimal(sqrt(Rational(2)), 20) == "1.4142135623730950488");
    CHECK(to_decimal(sqrt(make_rational(1, 50)), 5) == "0.14142");
}

TEST_CASE("surd floor agrees with floating point away from integers") {
    for (int i = 0; i < 500; ++i) {
        const long D = stair::testing::uniform(2, 200);
        const QuadraticSurd x(random_rational(-20, 40, 30), random_rational(-5, 10, 30), D);
        const double v = x.to_double();
        if (std::abs(v - std::round(v)) < 1e-9) continue;
        CHECK(floor(x) == static_cast<long>(std::floor(v)));
        CHECK(QuadraticSurd(Rational(floor(x))) <= x);
        CHECK(x < QuadraticSurd(Rational(floor(x) + 1)));
    }
}

TEST_CASE("convergents and the accumulation quadratic") {
    const auto c = convergents(sqrt(Rational(2)), 4);
    REQUIRE(c.size() == 4);
    CHECK(c[0] == 1);
    CHECK(c[1] == make_rational(3, 2));
    CHECK(c[2] == make_rational(7, 5));
    CHECK(c[3] == make_rational(17, 12));
    CHECK(convergents(QuadraticSurd(make_rational(7, 3)), 10).back() == make_rational(7, 3));

    const auto roots = solve_accumulation_quadratic(7);
    REQUIRE(roots);
    CHECK(roots->first == QuadraticSurd(make_rational(7, 2), make_rational(3, 2), 5));
    CHECK(roots->first * roots->second == QuadraticSurd(1));
    CHECK_FALSE(solve_accumulation_quadratic(1));
}

TEST_CASE("weight expansion examples") {
    const auto w = weight_expansion(make_rational(7, 3));
    REQUIRE(w.length() == 5);
    CHECK(w[0] == 1);
    CHECK(w[1] == 1);
    CHECK(w[2] == make_rational(1, 3));
    CHECK(w[4] == make_rational(1, 3));
    CHECK(w[5] == 0);
    CHECK(weight_expansion(1).length() == 1);
    CHECK(weight_length(make_rational(13, 5)) == 2 + 1 + 1 + 2);
    CHECK_THROWS_AS(weight_expansion(make_rational(1, 2)), DomainError);
}

TEST_CASE("weight identities on random rationals") {
    for (int i = 0; i < 300; ++i) {
        const Rational a = random_rational(1, 12, 200);
        const auto w = weight_expansion(a);
        Rational sum = 0, squares = 0;
        for (const auto& x : w.weights) {
            sum += x;
            squares += x * x;
        }
        const Rational last = make_rational(1, a.get_den().get_si());
        CHECK(squares == a);
        CHECK(sum == a + 1 - last);
        CHECK(w.weights.back() == last);
        CHECK(std::is_sorted(w.weights.rbegin(), w.weights.rend()));
        CHECK(w.length() == weight_length(a));
        CHECK(check_weight_identities(a, w));
    }
}

TEST_CASE("negative weight expansions parse and measure") {
    const auto X = NegativeWeightExpansion::parse("(4;2,1)");
    CHECK(X.per() == 9);
    CHECK(X.vol() == 11);
    CHECK(X.K() == make_rational(59, 11));
    CHECK(X.to_string() == "(4;2,1)");
    CHECK(NegativeWeightExpansion::parse("3;1^5").parts().size() == 5);
    CHECK(NegativeWeightExpansion::parse("3").per() == 9);
    CHECK(X.scaled(2).vol() == 44);
    CHECK_THROWS_AS(NegativeWeightExpansion::parse("4;"), DomainError);
    CHECK_THROWS_AS(NegativeWeightExpansion::parse("1;1"), DomainError);
    CHECK_THROWS_AS(NegativeWeightExpansion::parse("a;b"), DomainError);
}

TEST_CASE("greedy expansion of lattice polygons") {
    CHECK(negative_weight_expansion({{0, 0}, {3, 0}, {0, 3}}).to_string() == "(3)");
    CHECK(negative_weight_expansion({{0, 0}, {2, 0}, {2, 2}, {1, 3}, {0, 3}}).to_string() == "(4;2,1)");
    CHECK(negative_weight_expansion({{0, 0}, {2, 0}, {2, 2}, {0, 2}}).to_string() == "(4;2,2)");
    // the expansion does not depend on the lattice frame
    const auto X = negative_weight_expansion({{-1, 0}, {1, -1}, {0, 1}, {-1, 2}});
    for (const auto& Q : corner_positions({{-1, 0}, {1, -1}, {0, 1}, {-1, 2}})) {
        CHECK(negative_weight_expansion(Q).vol() == X.vol());
        CHECK(negative_weight_expansion(Q).per() == X.per());
    }
    CHECK_THROWS_AS(negative_weight_expansion({{0, 0}, {1, 0}}), UnsupportedShape);
}

TEST_CASE("lattice geometry and Pick") {
    const std::vector<LPoint> sq{{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    CHECK(area2(sq) == 8);
    CHECK(boundary_points(sq) == 8);
    CHECK(interior_points(sq) == 1);
    CHECK(lattice_points(sq) == 9);
    const auto cw = std::vector<LPoint>{{0, 0}, {0, 2}, {2, 2}, {2, 0}};
    CHECK(area2(make_ccw(cw)) == 8);
    CHECK(is_strictly_convex_ccw(to_rpoly(sq)));
    CHECK_FALSE(is_strictly_convex_ccw(to_rpoly({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}})));
    CHECK(simplify(to_rpoly({{0, 0}, {1, 0}, {2, 0}, {0, 2}})).size() == 3);
    CHECK(contains(to_rpoly(sq), RPoint(2, 1)));
    CHECK_FALSE(contains(to_rpoly(sq), RPoint(make_rational(5, 2), 1)));
    CHECK(lattice_length(LPoint{4, -6}) == 2);
    CHECK(primitive(IVec(4, -6)) == IVec(2, -3));
    CHECK(primitive_direction(RPoint(make_rational(1, 2), make_rational(-3, 4))) == IVec(2, -3));
}

TEST_CASE("unimodular matrices invert") {
    for (int i = 0; i < 100; ++i) {
        // products of elementary shears are unimodular
        IMat2 m = IMat2::identity();
        for (int j = 0; j < 4; ++j) {
            const long k = uniform(-3, 3);
            m = m * (j % 2 ? IMat2{1, k, 0, 1} : IMat2{1, 0, k, 1});
        }
        CHECK(m.det() == 1);
        CHECK(m * m.unimodular_inverse() == IMat2::identity());
    }
    CHECK_THROWS_AS((IMat2{2, 0, 0, 1}).unimodular_inverse(), DomainError);
}

}
