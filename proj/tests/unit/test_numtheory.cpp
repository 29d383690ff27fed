#include "stair/error.hpp"
#include "stair/families.hpp"
#include "stair/numtheory.hpp"

#include <doctest.h>

#include <set>

using namespace stair;

namespace {

// #{x, y >= 0 : x u + y v <= T} by direct enumeration with exact comparisons.
Integer brute_count(const SurdPair& p, long T) {
    Integer count = 0;
    const QuadraticSurd t(T);
    for (long x = 0; QuadraticSurd(x) * p.u <= t; ++x)
        for (long y = 0; QuadraticSurd(x) * p.u + QuadraticSurd(y) * p.v <= t; ++y) ++count;
    return count;
}

}  // namespace

TEST_SUITE("numtheory") {

TEST_CASE("C_theta basics") {
    const QuadraticSurd phi(make_rational(1, 2), make_rational(1, 2), 5);
    CHECK(c_theta(phi, 0) == QuadraticSurd(make_rational(-1, 2)));
    const auto series = c_theta_series(phi, 50);
    for (long n = 0; n <= 50; ++n) CHECK(series[static_cast<std::size_t>(n)] == c_theta(phi, n));
    // rational theta: {k/2} - 1/2 alternates -1/2, 0
    CHECK(c_theta(QuadraticSurd(make_rational(1, 2)), 3) == QuadraticSurd(-1));
    CHECK_THROWS_AS(c_theta(phi, -1), DomainError);
}

// a0 + 1/a0 integral: {k a0} + {k/a0} = 1 for k >= 1, so only the k = 0 terms survive.
TEST_CASE("C sums are constant when a0 + 1/a0 is an integer") {
    for (const auto* f : all_families()) {
        CAPTURE(f->name);
        const auto a = c_theta_series(f->a0, 200), b = c_theta_series(QuadraticSurd(1) / f->a0, 200);
        CHECK(a[0] == QuadraticSurd(make_rational(-1, 2)));
        for (std::size_t n = 0; n <= 200; ++n) CHECK(a[n] + b[n] == QuadraticSurd(-1));
        for (std::size_t k = 1; k <= 200; ++k) CHECK((a[k] - a[k - 1]) + (b[k] - b[k - 1]) == QuadraticSurd(0));
    }
}

TEST_CASE("surd pairs") {
    const auto p = surd_pair(NegativeWeightExpansion::parse("3"));
    CHECK(p.u * p.v == QuadraticSurd(9));
    CHECK(p.u + p.v == QuadraticSurd(9));
    CHECK(QuadraticSurd(1) / p.u + QuadraticSurd(1) / p.v == QuadraticSurd(1));  // per/vol
    CHECK(p.a0() == family(CaseId::ball).a0);
    CHECK_THROWS_AS(surd_pair(NegativeWeightExpansion::parse("3;1^5")), DomainError);  // a0 = 1
    CHECK_THROWS_AS(surd_pair(2, 2), DomainError);  // complex roots
}

TEST_CASE("Ehrhart counts: degenerate triangle and brute force") {
    SurdPair unit{QuadraticSurd(1), QuadraticSurd(1), 2, 1};
    CHECK(ehrhart_triangle(unit, 2) == 6);
    for (const auto* f : all_families()) {
        CAPTURE(f->name);
        const auto p = surd_pair(f->expansion);
        for (long T = 0; T <= 60; ++T) CHECK(ehrhart_triangle(p, T) == brute_count(p, T));
    }
}

TEST_CASE("d(T) identity at multiples of per") {
    for (const auto* f : all_families()) {
        const auto p = surd_pair(f->expansion);
        CHECK(d_of_T(p, 0) == 1);
        const long per = p.per.get_num().get_si();
        for (long n = 0; n <= 60; ++n) {
            const QuadraticSurd rhs = -(c_theta(p.a0(), n) + c_theta(QuadraticSurd(1) / p.a0(), n));
            CHECK(QuadraticSurd(d_of_T(p, Integer(n * per))) == rhs);
        }
    }
}

TEST_CASE("d series: parallel equals serial, finitely many values for the families") {
    for (const auto* f : all_families()) {
        const auto p = surd_pair(f->expansion);
        const auto par = d_series(p, 1500), ser = d_series_reference(p, 1500);
        CHECK(par == ser);
        CHECK(std::set<Rational>(par.begin(), par.end()).size() <= 10);
    }
    const auto p = surd_pair(NegativeWeightExpansion::parse("4;2,1"));
    const auto d = d_series(p, 1500);
    CHECK(*std::min_element(d.begin(), d.end()) < 0);
    CHECK(*std::max_element(d.begin(), d.end()) > 0);
}

TEST_CASE("quasipolynomial conditions") {
    CHECK(quasipolynomial_test(surd_pair(NegativeWeightExpansion::parse("3"))));
    CHECK(quasipolynomial_test(surd_pair(NegativeWeightExpansion::parse("4;2,2"))));
    CHECK_FALSE(quasipolynomial_test(surd_pair(NegativeWeightExpansion::parse("4;2,1"))));
    CHECK(quasipolynomial_conditions(4, 4));
    CHECK_FALSE(quasipolynomial_conditions(9, 11));
}

TEST_CASE("reflexive checks") {
    CHECK(reflexive_check({{-1, 0}, {1, -1}, {0, 1}}));
    CHECK_FALSE(reflexive_check({{0, 0}, {3, 0}, {3, 1}, {0, 1}}));
    CHECK_FALSE(reflexive_check({{0, 0}, {1, 0}, {0, 1}}));
    CHECK(reflexive_catalog().size() == 16);
    for (const auto& d : reflexive_catalog()) CHECK(reflexive_check(d.polygon));
    // the ball scaled by per/vol = 3 is reflexive
    CHECK(scaled_reflexive_test(NegativeWeightExpansion::parse("1"), {{0, 0}, {1, 0}, {0, 1}}));
    CHECK_FALSE(scaled_reflexive_test(NegativeWeightExpansion::parse("4;2,1")));
    CHECK_THROWS_AS(scaled_reflexive_test(NegativeWeightExpansion::parse("1"), {{0, 0}, {2, 0}, {0, 2}}), DomainError);
    CHECK_THROWS_AS(scaled_reflexive_test(NegativeWeightExpansion::parse("5;1")), UnsupportedShape);
    CHECK_THROWS_AS(reflexive_check({{0, 0}, {1, 1}, {2, 2}}), UnsupportedShape);
}

TEST_CASE("catalog: scaled reflexive test agrees with the conditions") {
    for (const auto& d : domain_catalog()) {
        CAPTURE(d.name);
        CHECK(scaled_reflexive_test(d.expansion, d.polygon) ==
              quasipolynomial_conditions(d.expansion.per(), d.expansion.vol()));
    }
}

TEST_CASE("cap function quasipolynomials") {
    const auto q = fit_gamma(NegativeWeightExpansion::parse("3;1^5"), 200);
    CHECK(q.modulus == 4);
    CHECK(q.gamma == std::vector<Rational>{1, make_rational(3, 8), make_rational(1, 2), make_rational(3, 8)});
    CHECK(q.quadratic == make_rational(1, 8));
    CHECK(q.linear == make_rational(1, 2));

    const auto ball = fit_gamma(NegativeWeightExpansion::parse("1"), 60);
    CHECK(ball.modulus == 1);
    CHECK(ball.gamma == std::vector<Rational>{1});
    for (long T = 0; T <= 60; ++T) CHECK(ball(T) == make_rational((T + 1) * (T + 2), 2));

    const auto cap = cap_values(NegativeWeightExpansion::parse("3;1^5"), 200);
    for (long T = q.stable_from; T <= 200; ++T) CHECK(q(T) == Rational(cap[static_cast<std::size_t>(T)]));
}

TEST_CASE("cap function of a non-primitive domain") {
    const auto X = NegativeWeightExpansion::parse("3");
    CHECK_FALSE(primitive(X));
    CHECK_THROWS_AS(fit_gamma(X, 100), DomainError);
    // quadratic 1/(2 vol) = 1/18 and linear per/(2 vol) = 1/2 on the residue class T = 0 mod 3
    const auto cap = cap_values(X, 300);
    for (long T = 0; T <= 300; T += 3)
        CHECK(Rational(cap[static_cast<std::size_t>(T)]) == make_rational(T * T, 18) + make_rational(T, 2) + 1);
}

TEST_CASE("fit_gamma reports short ranges instead of guessing") {
    CHECK_THROWS_AS(fit_gamma(NegativeWeightExpansion::parse("4;2,1"), 30), ShortfallError);
}

}
