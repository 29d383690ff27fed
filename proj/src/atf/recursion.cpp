#include "stair/atf.hpp"
#include "stair/error.hpp"

#include <sstream>

namespace stair {

namespace {

const RPoint kOrigin{Rational(0), Rational(0)};

std::string vec(const IVec& v) { return "(" + to_string(v.x) + "," + to_string(v.y) + ")"; }

Rational ratio(const Integer& p, const Integer& q) { return Rational(p) / Rational(q); }

// Lattice length of the segment p -> q along the primitive direction e.
Rational length_along(const RPoint& p, const RPoint& q, const IVec& e) {
    RPoint d = q - p;
    return e.x != 0 ? Rational(d.x / Rational(e.x)) : Rational(d.y / Rational(e.y));
}

// Node counts of the rays by role (u, v[, w]) at step n: every step shifts the roles by one.
std::vector<long> nodes_at(const RecurrenceFamily& fam, long n) {
    const BaseDiagram seed = pregame_script(fam.id).expected;
    const int J = fam.J;
    std::vector<long> by_role(static_cast<std::size_t>(J));
    // seed roles: u at (b,0) = vertex 1, v at the next vertex, w at (0,a) for J = 3
    for (const auto& r : seed.rays) {
        std::size_t role = r.anchor == 1 ? 0 : (J == 2 ? 1 : (r.anchor == 2 ? 1 : 2));
        by_role[role] = r.nodes;
    }
    std::vector<long> out(static_cast<std::size_t>(J));
    for (int role = 0; role < J; ++role)
        out[static_cast<std::size_t>(role)] = by_role[static_cast<std::size_t>(((role - n) % J + J) % J)];
    return out;
}

BaseDiagram diagram_from(const RecursionState& st, const std::vector<long>& nodes) {
    BaseDiagram d;
    const RPoint top{Rational(0), st.a}, right{st.b, Rational(0)};
    if (st.family->J == 2) {
        d.polygon = {kOrigin, right, top};
        d.rays = {{1, st.u, nodes[0]}, {2, st.v, nodes[1]}};
    } else {
        const RPoint corner = top + st.d * to_rpoint(st.s);
        d.polygon = {kOrigin, right, corner, top};
        d.rays = {{1, st.u, nodes[0]}, {2, st.v, nodes[1]}, {3, st.w, nodes[2]}};
    }
    d.validate();
    return d;
}

void require(bool ok, int item, const std::string& what, const RecursionState& st) {
    if (!ok)
        throw CheckFailure(st.family->name + ", n=" + std::to_string(st.n) + ": item " + std::to_string(item) +
                               " fails (" + what + ")",
                           item);
}

}  // namespace

bool same_data(const RecursionState& x, const RecursionState& y) {
    if (x.n != y.n || x.a != y.a || x.b != y.b || x.c != y.c || x.d != y.d) return false;
    if (x.u != y.u || x.v != y.v || x.w != y.w || x.r != y.r || x.s != y.s) return false;
    if (x.diagram.polygon != y.diagram.polygon || x.diagram.rays.size() != y.diagram.rays.size()) return false;
    for (std::size_t i = 0; i < x.diagram.rays.size(); ++i) {
        const auto &p = x.diagram.rays[i], &q = y.diagram.rays[i];
        if (p.anchor != q.anchor || p.direction != q.direction || p.nodes != q.nodes) return false;
    }
    return true;
}

IMat2 closed_form_matrix(const RecurrenceFamily& fam, long n) {
    auto g = [&](long k) -> Integer { return fam.g(k); };
    auto sg = [&](long k) -> Integer { return Integer(fam.sigma.at(k)); };
    if (fam.J == 2)
        return {-sg(n + 2) * g(n + 2) * g(n + 2), -sg(n + 1) * g(n + 1) * g(n + 1), sg(n + 3) * g(n + 3) * g(n + 3),
                2 + sg(n + 2) * g(n + 2) * g(n + 2)};
    return {1 - sg(n + 1) * g(n + 1) * g(n + 4), -sg(n + 1) * g(n + 1) * g(n + 1), sg(n + 4) * g(n + 4) * g(n + 4),
            1 + sg(n + 1) * g(n + 1) * g(n + 4)};
}

RecursionState closed_form_state(const RecurrenceFamily& fam, long n) {
    if (n < 0) throw DomainError("recursion index must be nonnegative");
    auto g = [&](long k) -> Integer { return fam.g(k); };
    auto sg = [&](long k) -> Integer { return Integer(fam.sigma.at(k)); };
    RecursionState st;
    st.family = &fam;
    st.n = n;
    const long J = fam.J;
    st.a = ratio(g(n + 1) + g(n + 1 + J), g(n + 1));
    st.b = ratio(g(n) + g(n + J), g(n + J));
    st.u = {-g(n), g(n + J)};
    if (J == 2) {
        st.v = {g(n + 1), -g(n + 3)};
        st.w = {sg(n + 1) * g(n + 1) * g(n + 1), -sg(n + 2) * g(n + 2) * g(n + 2)};
        st.c = st.b / Rational(st.w.x);
        if (st.c * Rational(st.w.y) != -st.a)
            throw CheckFailure(fam.name + ": hypotenuse direction does not join the legs at n=" + std::to_string(n), 0);
    } else {
        st.w = {g(n + 1), -g(n + 4)};
        st.s = {sg(n + 1) * g(n + 1) * g(n + 1), 1 - sg(n + 1) * g(n + 1) * g(n + 4)};
        st.r = {sg(n) * g(n) * g(n + 3) - 1, -sg(n + 3) * g(n + 3) * g(n + 3)};
        // corner P = (0,a) + d s = (b,0) - c r
        const RPoint rhs{st.b, -st.a}, s = to_rpoint(st.s), r = to_rpoint(st.r);
        const Rational det = cross(s, r);
        if (det == 0) throw CheckFailure(fam.name + ": edge directions parallel at n=" + std::to_string(n), 0);
        st.d = cross(rhs, r) / det;
        st.c = cross(s, rhs) / det;
        if (st.c <= 0 || st.d <= 0)
            throw CheckFailure(fam.name + ": degenerate quadrilateral at n=" + std::to_string(n), 0);
        if (n == 0) {
            const BaseDiagram seed = pregame_script(fam.id).expected;
            st.v = seed.rays[*seed.ray_at_vertex(2)].direction;
        } else {
            st.v = closed_form_matrix(fam, n - 1) * IVec{-g(n - 1), g(n + 2)};
        }
    }
    st.diagram = diagram_from(st, nodes_at(fam, n));
    return st;
}

RecursionState read_state(const RecurrenceFamily& fam, long n, const BaseDiagram& d) {
    const std::size_t expect = fam.J == 2 ? 3 : 4;
    const std::string where = fam.name + ", n=" + std::to_string(n) + ": ";
    if (d.polygon.size() != expect)
        throw CheckFailure(where + "diagram " + d.to_string() + " has the wrong number of vertices", 0);
    const RPoint right = d.polygon[1], top = d.polygon.back();
    if (d.polygon[0] != kOrigin || right.y != 0 || right.x <= 0 || top.x != 0 || top.y <= 0)
        throw CheckFailure(where + "diagram " + d.to_string() + " is not in normal position", 0);
    auto ray = [&](std::size_t vertex) -> IVec {
        auto idx = d.ray_at_vertex(vertex);
        if (!idx) throw CheckFailure(where + "no ray at vertex " + std::to_string(vertex), 0);
        return d.rays[*idx].direction;
    };
    if (d.rays.size() != expect - 1) throw CheckFailure(where + "wrong number of rays", 0);
    RecursionState st;
    st.family = &fam;
    st.n = n;
    st.a = top.y;
    st.b = right.x;
    st.diagram = d;
    st.u = ray(1);
    if (fam.J == 2) {
        st.v = ray(2);
        st.w = primitive_direction(right - top);
        st.c = length_along(top, right, st.w);
    } else {
        const RPoint corner = d.polygon[2];
        st.v = ray(2);
        st.w = ray(3);
        st.s = primitive_direction(corner - top);
        st.d = length_along(top, corner, st.s);
        st.r = primitive_direction(right - corner);
        st.c = length_along(corner, right, st.r);
    }
    return st;
}

RecursionState initial_state(CaseId id) {
    const RecurrenceFamily& fam = family(id);
    RecursionState st = read_state(fam, 0, pregame(id));
    if (!same_data(st, closed_form_state(fam, 0)))
        throw CheckFailure(fam.name + ": pregame seed disagrees with the closed forms at n=0", 0);
    return st;
}

StepResult recursion_step(const RecursionState& st) {
    const RecurrenceFamily& fam = *st.family;
    const auto top_ray = st.diagram.ray_at_vertex(st.diagram.polygon.size() - 1);
    if (!top_ray) throw CheckFailure(fam.name + ": no ray at (0,a_n)", 0);
    Mutation m = mutate(st.diagram, *top_ray, MutationSide::cw);
    const IMat2& M = m.shear;
    const IMat2 Mc = closed_form_matrix(fam, st.n);
    if (!(M == Mc)) {
        std::ostringstream os;
        os << "generic shear " << M << " differs from the closed-form matrix " << Mc;
        require(false, 0, os.str(), st);
    }
    StepResult out{read_state(fam, st.n + 1, m.result), M, 0};
    RecursionState& nx = out.next;
    nx.prev_shear = M;
    nx.prev_u = st.u;
    const IVec e2{0, 1}, minus_e1{-1, 0};
    int& k = out.items_checked;
    auto item = [&](bool ok, const std::string& what) {
        ++k;
        require(ok, k, what, st);
    };
    if (fam.J == 2) {
        item(M * st.v == st.v, "M v = v");
        item(M * st.w == e2, "M w = (0,1)");
        item(M.det() == 1, "det M = 1");
        item(nx.w == M * minus_e1, "w' = M(-1,0), got " + vec(nx.w));
        item(nx.v == M * st.u, "v' = M u, got " + vec(nx.v));
        item(nx.u == -st.v, "u' = -v, got " + vec(nx.u));
        item(nx.a == st.a + st.c, "a' = a + c");
        item(nx.b == -st.a * Rational(st.v.x) / Rational(st.v.y), "b' = -a v_1/v_2");
        item(nx.c == st.b - nx.b, "c' = b - b'");
    } else {
        item(M * st.w == st.w, "M w = w");
        item(M * st.s == e2, "M s = (0,1)");
        item(M.det() == 1, "det M = 1");
        item(nx.s == M * st.r, "s' = M r, got " + vec(nx.s));
        item(nx.r == M * minus_e1, "r' = M(-1,0), got " + vec(nx.r));
        item(nx.v == M * st.u, "v' = M u, got " + vec(nx.v));
        bool w_ok = nx.w == M * st.v;
        if (st.prev_shear && st.prev_u) w_ok = w_ok && nx.w == M * (*st.prev_shear * *st.prev_u);
        item(w_ok, "w' = M v = M M_prev u_prev, got " + vec(nx.w));
        item(nx.u == -st.w, "u' = -w, got " + vec(nx.u));
        item(nx.a == st.a + st.d, "a' = a + d");
        item(nx.d == st.c, "d' = c");
        item(nx.b == -st.a * Rational(st.w.x) / Rational(st.w.y), "b' = -a w_1/w_2");
        item(nx.c == st.b - nx.b, "c' = b - b'");
    }
    return out;
}

std::vector<RPoint> ellipsoid_triangle(const RecurrenceFamily& fam, long n) {
    const long J = fam.J;
    Rational a = ratio(fam.g(n + 1) + fam.g(n + 1 + J), fam.g(n + 1));
    Rational b = ratio(fam.g(n) + fam.g(n + J), fam.g(n + J));
    return {kOrigin, {b, Rational(0)}, {Rational(0), a}};
}

bool contains_ellipsoid_triangle(const RecursionState& st) {
    for (const auto& p : ellipsoid_triangle(*st.family, st.n))
        if (!contains(st.diagram.polygon, p)) return false;
    return true;
}

bool fills_with_ellipsoid_triangle(const RecursionState& st) {
    return st.diagram.polygon == ellipsoid_triangle(*st.family, st.n);
}

RecursionRun run_recursion(CaseId id, long steps) {
    const RecurrenceFamily& fam = family(id);
    RecursionRun run;
    run.states.push_back(initial_state(id));
    auto check_fit = [&](const RecursionState& st) {
        if (!contains_ellipsoid_triangle(st))
            throw CheckFailure(fam.name + ": ellipsoid triangle escapes the diagram at n=" + std::to_string(st.n), 0);
        const bool fills = fills_with_ellipsoid_triangle(st);
        if (fam.J == 2 && !fills)
            throw CheckFailure(fam.name + ": diagram is not the ellipsoid triangle at n=" + std::to_string(st.n), 0);
        if (fam.J == 3 && fills)
            throw CheckFailure(fam.name + ": containment is not strict at n=" + std::to_string(st.n), 0);
    };
    check_fit(run.states.back());
    for (long i = 0; i < steps; ++i) {
        StepResult r = recursion_step(run.states.back());
        run.items_checked += r.items_checked;
        run.shears.push_back(r.shear);
        if (!same_data(r.next, closed_form_state(fam, r.next.n)))
            throw CheckFailure(fam.name + ": mutated diagram disagrees with the closed forms at n=" +
                                   std::to_string(r.next.n),
                               0);
        check_fit(r.next);
        run.states.push_back(std::move(r.next));
    }
    return run;
}

}  // namespace stair
