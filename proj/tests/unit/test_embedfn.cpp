#include "stair/capacities.hpp"
#include "stair/embedfn.hpp"
#include "stair/families.hpp"
#include "stair/staircases.hpp"

#include <doctest.h>

using namespace stair;

TEST_SUITE("embedfn") {

TEST_CASE("accumulation points of the six families") {
    const std::pair<const char*, QuadraticSurd> table[] = {
        {"(3)", QuadraticSurd(make_rational(7, 2), make_rational(3, 2), 5)},
        {"(4;2,2)", QuadraticSurd(3, 2, 2)},
        {"(3;1,1,1)", QuadraticSurd(2, 1, 3)},
        {"(3;1,1,1,1)", QuadraticSurd(make_rational(3, 2), make_rational(1, 2), 5)},
        {"(3;1)", QuadraticSurd(3, 2, 2)},
        {"(3;1,1)", QuadraticSurd(make_rational(5, 2), make_rational(1, 2), 21)},
    };
    for (const auto& [name, a0] : table) {
        CAPTURE(name);
        const auto& f = family_by_name(name);
        CHECK(accumulation_point(f.expansion) == a0);
        CHECK(f.a0 == a0);
        CHECK(a0 * a0 - QuadraticSurd(f.K) * a0 + QuadraticSurd(1) == QuadraticSurd(0));
    }
}

TEST_CASE("accumulation point edge cases") {
    const auto a0 = accumulation_point(NegativeWeightExpansion::parse("4;2,1"));
    REQUIRE(a0);
    CHECK(to_fixed(*a0, 5) == "5.17022");
    // per^2/vol = 4: the roots coincide at 1
    CHECK(accumulation_point(NegativeWeightExpansion::parse("3;1^5")) == QuadraticSurd(1));
}

TEST_CASE("samples of the ball family sit on the staircase at its corners") {
    const auto& fam = family(CaseId::ball);
    const auto c = ech_convex_toric(fam.expansion, 6000);
    const auto g = staircase_graph(fam);
    for (const auto& corner : g.corners_up_to(5)) {
        if (corner.x < 1 || corner.x > 5) continue;
        const auto s = sample_at(c, fam.expansion, corner.x);
        CAPTURE(to_string(corner.x));
        CHECK(s.certified);
        CHECK(s.value == corner.y);
    }
}

TEST_CASE("samples are lower bounds for the staircase") {
    const auto& fam = family(CaseId::ball);
    const auto g = staircase_graph(fam);
    const auto samples = sample_embedding_function(fam.expansion, 1, 5, make_rational(1, 20), 6000);
    CHECK(samples.size() == 81);
    for (const auto& s : samples) CHECK(s.value <= g.evaluate(s.a));
}

TEST_CASE("serial and parallel sampling agree") {
    const auto X = NegativeWeightExpansion::parse("4;2,1");
    const auto c = ech_convex_toric(X, 3000);
    const auto par = sample_embedding_function(c, X, 1, 4, make_rational(1, 10), Exec::parallel);
    const auto ser = sample_embedding_function(c, X, 1, 4, make_rational(1, 10), Exec::serial);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
        CHECK(par[i].value == ser[i].value);
        CHECK(par[i].witness_k == ser[i].witness_k);
    }
}

TEST_CASE("corner detection on exact graph samples") {
    const auto& fam = family(CaseId::ball);
    const auto g = staircase_graph(fam);
    std::vector<FunctionSample> samples;
    const Rational step = make_rational(1, 100);
    for (Rational a = 1; a <= 6; a += step) samples.push_back({a, g.evaluate(a), 0, true, false});
    const auto found = detect_corners(samples, make_rational(1, 1000));
    for (const auto& c : g.corners_up_to(6)) {
        if (c.x <= 1 || c.x >= 6) continue;
        bool hit = false;
        for (const auto& d : found) hit = hit || (abs(d.a - c.x) <= step && d.kind == c.kind);
        CAPTURE(to_string(c.x));
        CHECK(hit);
    }
}

TEST_CASE("linear recurrence fitting") {
    std::vector<Integer> fib_odd{2, 1, 1, 2, 5, 13, 34, 89, 233};
    auto r = fit_linear_recurrence(fib_odd);
    REQUIRE(r);
    CHECK(r->order == 2);
    CHECK(r->coefficients == std::vector<Rational>{-1, 3});

    std::vector<Integer> powers{1, 2, 4, 8, 16, 32};
    r = fit_linear_recurrence(powers);
    REQUIRE(r);
    CHECK(r->order == 1);
    CHECK(r->coefficients == std::vector<Rational>{2});

    // every family sequence satisfies its order-2J recurrence
    for (const auto* f : all_families()) {
        std::vector<Integer> g;
        for (long n = 0; n < 8 * f->J; ++n) g.push_back(f->g(n));
        const auto fit = fit_linear_recurrence(g);
        REQUIRE(fit);
        CHECK(fit->order <= static_cast<std::size_t>(2 * f->J));
    }
    CHECK_FALSE(fit_linear_recurrence({1, 2}));
}

TEST_CASE("obstruction gap is absent for the ball") {
    const auto rep = staircase_obstruction(family(CaseId::ball).expansion, 20000, make_rational(1, 10));
    CHECK_FALSE(rep.gap_positive);
    CHECK(rep.lower_bound_at_a0 <= rep.volume_value);
    CHECK_FALSE(rep.probes.empty());
}

}
