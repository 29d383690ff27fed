// One line per acceptance criterion: status, measured time against its limit, and the evidence.
#include "stair/atf.hpp"
#include "stair/capacities.hpp"
#include "stair/embedfn.hpp"
#include "stair/error.hpp"
#include "stair/families.hpp"
#include "stair/latticepaths.hpp"
#include "stair/numtheory.hpp"
#include "stair/staircases.hpp"
#include "stair/weights.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace stair;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = "FAILED: " + what;
        pass = pass && ok;
    }
};

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<Outcome()> body;
};

const std::vector<LPoint> kPolygons[] = {
    {{-1, 0}, {2, -3}, {-1, 3}},
    {{-2, 1}, {2, -3}, {0, 1}},
    {{-2, 3}, {1, -3}, {1, -1}, {0, 1}},
    {{-2, 3}, {0, -1}, {2, -3}, {0, 1}},
    {{-1, -1}, {1, -1}, {0, 1}, {-1, 2}},
    {{-1, 0}, {1, -2}, {1, -1}, {0, 1}, {-1, 2}},
    {{-3, 1}, {1, -1}, {0, 1}},
    {{-2, 3}, {0, -1}, {1, -1}, {0, 1}},
    {{-1, 0}, {0, -1}, {1, -1}, {0, 1}, {-1, 2}},
    {{-1, 1}, {0, -1}, {1, -2}, {1, -1}, {0, 1}, {-1, 2}},
    {{-1, 0}, {1, -1}, {0, 1}, {-1, 2}},
    {{-1, 1}, {0, -1}, {1, -1}, {0, 1}, {-1, 2}},
};

Outcome accumulation_points() {
    Outcome o;
    const std::pair<const char*, QuadraticSurd> table[] = {
        {"(3)", QuadraticSurd(make_rational(7, 2), make_rational(3, 2), 5)},
        {"(4;2,2)", QuadraticSurd(3, 2, 2)},
        {"(3;1,1,1)", QuadraticSurd(2, 1, 3)},
        {"(3;1,1,1,1)", QuadraticSurd(make_rational(3, 2), make_rational(1, 2), 5)},
        {"(3;1)", QuadraticSurd(3, 2, 2)},
        {"(3;1,1)", QuadraticSurd(make_rational(5, 2), make_rational(1, 2), 21)},
    };
    for (const auto& [name, expect] : table) {
        const auto a0 = accumulation_point(family_by_name(name).expansion);
        o.require(a0 && *a0 == expect, std::string(name) + " accumulation point");
    }
    o.detail = o.pass ? "6/6 surds equal" : o.detail;
    return o;
}

Outcome appendix_reproduction() {
    Outcome o;
    const auto X = NegativeWeightExpansion::parse("4;2,1");
    const auto a0 = accumulation_point(X);
    o.require(a0.has_value(), "a0 exists");
    const std::string fixed = a0 ? to_fixed(*a0, 5) : "";
    o.require(fixed == "5.17022", "a0 to 5 places");
    o.require(X.per() == 9 && X.vol() == 11, "per = 9, vol = 11");
    if (o.pass) o.detail = "a0 = " + fixed + ", per = 9, vol = 11";
    return o;
}

Outcome outer_obstruction() {
    Outcome o;
    int checked = 0;
    for (const auto* f : all_families())
        for (long n = 0; n <= 12; ++n) {
            const auto r = verify_outer_obstruction(*f, n);
            o.require(r.ok, f->name + " n=" + std::to_string(n) + ": " + r.diagnostic);
            ++checked;
        }
    const auto r1 = verify_outer_obstruction(family(CaseId::ball), 1);
    o.require(r1.k_n == 2 && r1.ratio && *r1.ratio == make_rational(2, 3), "(3) n=1 ratio 2/3 at k = 2");
    if (o.pass) o.detail = std::to_string(checked) + " (case, n) pairs; (3) n=1: k = 2, ratio = 2/3";
    return o;
}

Outcome lattice_paths() {
    Outcome o;
    int checked = 0;
    for (const auto* f : all_families())
        for (long n = 0; n <= 20; ++n) {
            const auto c = verify_lambda(*f, n);
            const Integer gn = f->g(n), gj = f->g(n + f->J);
            o.require(c.ok, f->name + " n=" + std::to_string(n) + ": " + c.diagnostic);
            o.require(c.L_direct == (gn + 1) * (gj + 1) / 2 && c.ell_direct == gn + gj,
                      f->name + " n=" + std::to_string(n) + " closed forms");
            ++checked;
        }
    if (o.pass) o.detail = std::to_string(checked) + " paths, count and length by closed form and geometry";
    return o;
}

Outcome identity_suite() {
    Outcome o;
    for (const auto* f : all_families()) {
        std::string diag;
        o.require(verify_identities(*f, 200, &diag), f->name + ": " + diag);
        o.require(verify_constant_tables(*f, &diag), f->name + ": " + diag);
    }
    if (o.pass) o.detail = "6 cases, n <= 200, constant tables consistent";
    return o;
}

Outcome atf_recursion() {
    Outcome o;
    int items = 0;
    for (const auto* f : all_families()) {
        try {
            const auto run = run_recursion(f->id, 30);
            items += run.items_checked;
            o.require(run.items_checked == 30 * (f->J == 2 ? 9 : 12), f->name + " item count");
            for (const auto& s : run.states) {
                o.require(contains_ellipsoid_triangle(s), f->name + " containment at n=" + std::to_string(s.n));
                o.require(fills_with_ellipsoid_triangle(s) == (f->J == 2),
                          f->name + (f->J == 2 ? " equality" : " strictness") + " at n=" + std::to_string(s.n));
            }
        } catch (const CheckFailure& e) {
            o.require(false, f->name + " item " + std::to_string(e.item()) + ": " + e.what());
        }
    }
    if (o.pass) o.detail = std::to_string(items) + " items over 6 x 30 steps; J=2 fills, J=3 strict";
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    int positions = 0;
    for (const auto& P : kPolygons) {
        const auto X = negative_weight_expansion(P);
        const auto seq = ech_convex_toric(X, 16);
        for (const auto& Q : corner_positions(P)) {
            const auto tab = ck_table_via_paths(ConvexRegion::from_lattice(Q), 15);
            for (std::size_t k = 0; k <= 15; ++k)
                o.require(tab[k] == seq[k], X.to_string() + " k=" + std::to_string(k));
            ++positions;
        }
    }
    const auto p = ech_convex_toric(NegativeWeightExpansion::parse("4;2,2"), 51);
    for (long k = 0; k <= 50; ++k) {
        Rational best = -1;
        for (long m = 0; m <= k; ++m) {
            const long n = (k + 1 + m) / (m + 1) - 1;
            const Rational v = Rational(2 * m + 2 * n);
            if (best < 0 || v < best) best = v;
        }
        o.require(p[static_cast<std::size_t>(k)] == best, "(4;2,2) polydisk k=" + std::to_string(k));
    }
    if (o.pass) o.detail = "12 domains in " + std::to_string(positions) + " frames, k <= 15; polydisk k <= 50";
    return o;
}

Outcome graph_vs_sampling() {
    Outcome o;
    const auto& fam = family(CaseId::ball);
    const Rational lo = 1, hi = make_rational(68, 10), step = make_rational(1, 100);
    const auto samples = sample_embedding_function(fam.expansion, lo, hi, step, 50000);
    const auto g = staircase_graph(fam);
    std::size_t below = 0;
    for (const auto& s : samples) {
        o.require(s.value <= g.evaluate(s.a), "sample above graph at " + to_string(s.a));
        if (s.value < g.evaluate(s.a)) ++below;
    }
    int on_grid = 0;
    for (const auto& c : g.corners_up_to(hi)) {
        const Rational index = (c.x - lo) / step;
        if (c.x < lo || c.x > hi || index.get_den() != 1) continue;
        const auto& s = samples[static_cast<std::size_t>(index.get_num().get_si())];
        o.require(s.a == c.x && s.value == c.y, "corner " + to_string(c.x) + " sample " + to_string(s.value));
        ++on_grid;
    }
    const auto found = detect_corners(samples, make_rational(1, 1000));
    for (const Rational& x : {Rational(2), Rational(4), Rational(5), make_rational(25, 4)}) {
        bool hit = false;
        for (const auto& d : found) hit = hit || abs(d.a - x) <= step;
        o.require(hit, "detect_corners misses " + to_string(x));
    }
    if (o.pass)
        o.detail = std::to_string(samples.size()) + " samples <= graph (" + std::to_string(below) +
                   " strictly), " + std::to_string(on_grid) + " grid corners exact, 2 4 5 25/4 detected";
    return o;
}

Outcome obstruction_gap() {
    Outcome o;
    const std::pair<const char*, bool> cases[] = {{"4;2,1", true}, {"3", false}, {"4;2,2", false}, {"4;1,1,1,1", false}};
    std::string summary;
    for (const auto& [name, expect] : cases) {
        const auto rep = staircase_obstruction(NegativeWeightExpansion::parse(name), 100000, make_rational(1, 10));
        o.require(rep.gap_positive == expect, std::string("(") + name + ") gap_positive");
        summary += std::string(summary.empty() ? "" : ", ") + "(" + name + ")=" + (rep.gap_positive ? "gap" : "none");
    }
    if (o.pass) o.detail = summary;
    return o;
}

Outcome number_theory() {
    Outcome o;
    bool identity = true, c_zero = true, rest_ok = true;
    std::set<std::string> c_values;
    for (const auto* f : all_families()) {
        const auto p = surd_pair(f->expansion);
        const long per = p.per.get_num().get_si();
        const auto a = c_theta_series(p.a0(), 300), b = c_theta_series(QuadraticSurd(1) / p.a0(), 300);
        for (long n = 0; n <= 300; ++n) {
            const auto sum = a[static_cast<std::size_t>(n)] + b[static_cast<std::size_t>(n)];
            identity = identity && QuadraticSurd(d_of_T(p, Integer(n * per))) == -sum;
            if (n <= 200) {
                c_zero = c_zero && sum == QuadraticSurd(0);
                c_values.insert(sum.to_string());
            }
        }
    }
    o.require(identity, "d(n per) = -(C_a0 + C_1/a0) for n <= 300");
    if (!c_zero) {
        // With the k = 0 term in C_theta the sum is -1/2 - 1/2 plus pairs {k a0} + {k/a0} - 1 that vanish for k >= 1.
        std::string seen;
        for (const auto& v : c_values) seen += (seen.empty() ? "" : " ") + v;
        o.require(false, "C_a0 + C_1/a0 == 0 for n <= 200 (observed values {" + seen +
                             "}: the k = 0 terms give -1, the k >= 1 terms cancel exactly)");
    }
    std::string signs;
    for (const Rational& K : {make_rational(59, 11), make_rational(61, 9)}) {
        const auto theta = solve_accumulation_quadratic(K)->first;
        const auto a = c_theta_series(theta, 2000), b = c_theta_series(QuadraticSurd(1) / theta, 2000);
        bool pos = false, neg = false, lattice = true;
        for (std::size_t n = 0; n <= 2000; ++n) {
            const auto s = a[n] + b[n];
            pos = pos || s.sign() > 0;
            neg = neg || s.sign() < 0;
            lattice = lattice && s.is_rational() && Rational(s.to_rational() * K.get_den()).get_den() == 1;
        }
        o.require(pos && neg, "both signs for K = " + to_string(K));
        o.require(lattice, "values in (1/q)Z for K = " + to_string(K));
        rest_ok = rest_ok && pos && neg && lattice;
        signs += (signs.empty() ? "" : ", ") + to_string(K);
    }
    const auto q = fit_gamma(NegativeWeightExpansion::parse("3;1^5"), 200);
    const bool gamma_ok = q.modulus == 4 && q.gamma == std::vector<Rational>{1, make_rational(3, 8),
                                                                             make_rational(1, 2), make_rational(3, 8)};
    o.require(gamma_ok, "Gamma for (3;1,1,1,1,1)");
    rest_ok = rest_ok && gamma_ok;
    if (o.pass) o.detail = "d identity n <= 300, C sums zero n <= 200, both signs for K = " + signs + ", Gamma mod 4 = (1, 3/8, 1/2, 3/8)";
    else if (identity && o.detail.find("C_a0 + C_1/a0") != std::string::npos)
        o.detail += "; d identity, signs for K = " + signs + " and Gamma mod 4 " + (rest_ok ? "pass" : "not all pass");
    return o;
}

Outcome reflexivity() {
    Outcome o;
    for (const auto& d : reflexive_catalog()) o.require(reflexive_check(d.polygon), d.name + " reflexive");
    int positive = 0;
    for (const auto& d : domain_catalog()) {
        bool qp;
        try {
            qp = quasipolynomial_test(surd_pair(d.expansion));
        } catch (const DomainError&) {
            // a0 rational or complex: the conditions themselves
            qp = quasipolynomial_conditions(d.expansion.per(), d.expansion.vol());
        }
        o.require(scaled_reflexive_test(d.expansion) == qp, d.name + " scaled test");
        positive += qp;
    }
    if (o.pass)
        o.detail = "16/16 reflexive; scaled test matches on " + std::to_string(domain_catalog().size()) +
                   " domains (" + std::to_string(positive) + " positive)";
    return o;
}

Outcome weight_expansions() {
    Outcome o;
    std::mt19937_64 gen(20240611);
    std::uniform_int_distribution<long> den(1, 5000), whole(1, 40);
    for (int i = 0; i < 1000; ++i) {
        const long q = den(gen);
        const long p = std::uniform_int_distribution<long>(0, q - 1)(gen);
        const Rational a = make_rational(whole(gen) * q + p, q);
        const auto w = weight_expansion(a);
        Rational sum = 0, squares = 0;
        for (const auto& x : w.weights) {
            sum += x;
            squares += x * x;
        }
        const Rational last = make_rational(1, a.get_den().get_si());
        o.require(squares == a && sum == a + 1 - last && w.weights.back() == last, "a = " + to_string(a));
        o.require(check_weight_identities(a, w), "library check at a = " + to_string(a));
    }
    if (o.pass) o.detail = "1000 random rationals";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "accumulation points", 1, accumulation_points},
        {2, "(4;2,1) reproduction", 1, appendix_reproduction},
        {3, "outer-corner obstruction", 120, outer_obstruction},
        {4, "lattice-path families", 60, lattice_paths},
        {5, "identity suite", 10, identity_suite},
        {6, "mutation recursion", 10, atf_recursion},
        {7, "oracle equivalence", 120, oracle_equivalence},
        {8, "graph vs sampling", 300, graph_vs_sampling},
        {9, "obstruction gap", 300, obstruction_gap},
        {10, "number theory", 180, number_theory},
        {11, "reflexivity filter", 5, reflexivity},
        {12, "weight expansions", 5, weight_expansions},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = o.pass && in_time;
        failed += !pass;
        std::printf("[%s] %2d %-26s %8.3fs / %5.0fs  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    c.limit_seconds, o.detail.c_str(), in_time ? "" : " (over time limit)");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
