#include "stair/atf.hpp"
#include "stair/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace stair {

namespace {

std::string pt(const RPoint& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }
std::string vec(const IVec& v) { return "(" + to_string(v.x) + "," + to_string(v.y) + ")"; }

bool is_primitive(const IVec& v) {
    if (v.x == 0 && v.y == 0) return false;
    Integer g;
    mpz_gcd(g.get_mpz_t(), v.x.get_mpz_t(), v.y.get_mpz_t());
    return g == 1;
}

std::size_t next(std::size_t i, std::size_t n) { return (i + 1) % n; }
std::size_t prev(std::size_t i, std::size_t n) { return (i + n - 1) % n; }

// Primitive directions of the edges leaving vertex i: toward i+1 and toward i-1.
std::pair<IVec, IVec> corner_edges(const std::vector<RPoint>& P, std::size_t i) {
    const std::size_t n = P.size();
    return {primitive_direction(P[next(i, n)] - P[i]), primitive_direction(P[prev(i, n)] - P[i])};
}

bool points_inward(const std::vector<RPoint>& P, std::size_t i, const IVec& d) {
    const std::size_t n = P.size();
    RPoint dv = to_rpoint(d);
    return cross(P[next(i, n)] - P[i], dv) > 0 && cross(dv, P[prev(i, n)] - P[i]) > 0;
}

struct RayAt {
    RPoint anchor;
    IVec direction;
    long nodes;
};

// Rebuilds index-based rays and starts the vertex list at the lexicographically smallest vertex after the polygon has been simplified.
BaseDiagram assemble(std::vector<RPoint> poly, const std::vector<RayAt>& rays) {
    BaseDiagram d;
    d.polygon = simplify(make_ccw(std::move(poly)));
    std::rotate(d.polygon.begin(), std::min_element(d.polygon.begin(), d.polygon.end()), d.polygon.end());
    for (const auto& r : rays) {
        auto idx = d.vertex_index(r.anchor);
        if (!idx) throw CheckFailure("ray anchor " + pt(r.anchor) + " is no longer a vertex", 0);
        d.rays.push_back({*idx, r.direction, r.nodes});
    }
    std::sort(d.rays.begin(), d.rays.end(), [](const NodalRay& x, const NodalRay& y) { return x.anchor < y.anchor; });
    return d;
}

std::vector<RayAt> rays_at(const BaseDiagram& d) {
    std::vector<RayAt> out;
    for (const auto& r : d.rays) out.push_back({d.polygon[r.anchor], r.direction, r.nodes});
    return out;
}

}  // namespace

void BaseDiagram::validate() const {
    if (polygon.size() < 3) throw DomainError("base diagram needs at least three vertices");
    if (!is_strictly_convex_ccw(polygon)) throw DomainError("base diagram polygon is not convex and counterclockwise");
    std::vector<bool> used(polygon.size(), false);
    for (const auto& r : rays) {
        if (r.anchor >= polygon.size()) throw DomainError("ray anchor out of range");
        if (used[r.anchor]) throw DomainError("two rays at vertex " + pt(polygon[r.anchor]));
        used[r.anchor] = true;
        if (!is_primitive(r.direction)) throw DomainError("ray direction " + vec(r.direction) + " is not primitive");
        if (r.nodes < 1) throw DomainError("ray without nodes");
        if (!points_inward(polygon, r.anchor, r.direction))
            throw DomainError("ray " + vec(r.direction) + " at " + pt(polygon[r.anchor]) + " does not enter the polygon");
    }
}

Rational BaseDiagram::area() const { return area2(polygon) / 2; }

std::optional<std::size_t> BaseDiagram::vertex_index(const RPoint& p) const {
    for (std::size_t i = 0; i < polygon.size(); ++i)
        if (polygon[i] == p) return i;
    return std::nullopt;
}

std::optional<std::size_t> BaseDiagram::ray_at_vertex(std::size_t vertex) const {
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (rays[i].anchor == vertex) return i;
    return std::nullopt;
}

std::size_t BaseDiagram::total_nodes() const {
    std::size_t s = 0;
    for (const auto& r : rays) s += static_cast<std::size_t>(r.nodes);
    return s;
}

std::string BaseDiagram::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < polygon.size(); ++i) os << (i ? " " : "") << pt(polygon[i]);
    os << "]";
    for (const auto& r : rays) os << " " << vec(r.direction) << "@" << pt(polygon[r.anchor]) << "x" << r.nodes;
    return os.str();
}

BaseDiagram nodal_trade(const BaseDiagram& d, std::size_t vertex) {
    if (vertex >= d.polygon.size()) throw DomainError("vertex index out of range");
    if (d.ray_at_vertex(vertex)) throw DomainError("vertex " + pt(d.polygon[vertex]) + " already carries a ray");
    auto [e1, e2] = corner_edges(d.polygon, vertex);
    Integer det = cross(e1, e2);
    if (det != 1 && det != -1) throw DomainError("corner " + pt(d.polygon[vertex]) + " is not smooth");
    BaseDiagram out = d;
    out.rays.push_back({vertex, e1 + e2, 1});
    std::sort(out.rays.begin(), out.rays.end(), [](const NodalRay& x, const NodalRay& y) { return x.anchor < y.anchor; });
    out.validate();
    return out;
}

Mutation mutate(const BaseDiagram& d, std::size_t ray, MutationSide side) {
    if (ray >= d.rays.size()) throw DomainError("ray index out of range");
    const auto& P = d.polygon;
    const std::size_t n = P.size();
    const std::size_t i = d.rays[ray].anchor;
    const IVec v = d.rays[ray].direction;
    const RPoint A = P[i], vr = to_rpoint(v);

    // exit point: first crossing of the ray with an edge not incident to the anchor
    std::optional<Rational> best_t;
    std::size_t j = 0;
    Rational ju;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == i || next(k, n) == i) continue;
        RPoint e = P[next(k, n)] - P[k];
        Rational den = cross(vr, e);
        if (den == 0) continue;
        Rational t = cross(P[k] - A, e) / den;
        Rational u = cross(P[k] - A, vr) / den;
        if (t > 0 && u >= 0 && u <= 1 && (!best_t || t < *best_t)) {
            best_t = t;
            j = k;
            ju = u;
        }
    }
    if (!best_t) throw DomainError("ray at " + pt(A) + " never leaves the polygon");
    const RPoint H = A + *best_t * vr;
    std::optional<std::size_t> opposite;
    if (ju == 0 || ju == 1) {
        auto hv = d.vertex_index(H);
        auto hr = hv ? d.ray_at_vertex(*hv) : std::nullopt;
        if (!hr || d.rays[*hr].direction != -v)
            throw DomainError("ray at " + pt(A) + " hits the vertex " + pt(H) + " without an opposite ray");
        opposite = hr;
    }

    // the two chains between A and H
    std::vector<RPoint> c1{A}, c2{H};
    for (std::size_t k = next(i, n);; k = next(k, n)) {
        c1.push_back(P[k]);
        if (k == j) break;
    }
    c1.push_back(H);
    for (std::size_t k = next(j, n); k != i; k = next(k, n)) c2.push_back(P[k]);
    c2.push_back(A);

    auto [to_next, to_prev] = corner_edges(P, i);
    const IVec e1 = side == MutationSide::ccw ? to_next : to_prev;
    const IVec e2 = side == MutationSide::ccw ? to_prev : to_next;
    // shear x -> x + k cross(v, x) v fixes v; pick k with e1 -> -e2
    const IVec target = -e2 - e1;
    const Integer c = cross(v, e1);
    if (c == 0 || cross(target, v) != 0)
        throw DomainError("anchor edges at " + pt(A) + " cannot be aligned by a shear along the ray");
    Rational k = Rational(v.x != 0 ? target.x : target.y) / Rational(c * (v.x != 0 ? v.x : v.y));
    if (k.get_den() != 1) throw DomainError("aligning shear at " + pt(A) + " is not integral");
    const Integer kk = k.get_num();
    IMat2 M{1 - kk * v.x * v.y, kk * v.x * v.x, -kk * v.y * v.y, 1 + kk * v.x * v.y};
    if (M * v != v || M * e1 != -e2 || M.det() != 1) throw CheckFailure("shear construction at " + pt(A), 0);

    auto f = [&](const RPoint& x) -> RPoint { return A + M.apply(x - A); };
    const std::vector<RPoint>& moved = side == MutationSide::ccw ? c1 : c2;
    std::vector<RPoint> poly;
    if (side == MutationSide::ccw) {
        for (const auto& x : c1) poly.push_back(f(x));
        poly.insert(poly.end(), c2.begin() + 1, c2.end() - 1);
    } else {
        poly = c1;
        for (std::size_t q = 1; q + 1 < c2.size(); ++q) poly.push_back(f(c2[q]));
    }
    auto in_moved = [&](const RPoint& x) -> bool {
        if (x == A || x == H) return false;
        return std::find(moved.begin() + 1, moved.end() - 1, x) != moved.end() - 1;
    };

    std::vector<RayAt> rays;
    const long carried = d.rays[ray].nodes;
    long merged = 0;
    for (std::size_t q = 0; q < d.rays.size(); ++q) {
        if (q == ray) continue;
        if (opposite && q == *opposite) {
            merged = d.rays[q].nodes;
            continue;
        }
        const RPoint a = P[d.rays[q].anchor];
        if (in_moved(a))
            rays.push_back({f(a), M * d.rays[q].direction, d.rays[q].nodes});
        else
            rays.push_back({a, d.rays[q].direction, d.rays[q].nodes});
    }
    rays.push_back({H, -v, carried + merged});

    Mutation m{assemble(std::move(poly), rays), M, H};
    if (!is_strictly_convex_ccw(m.result.polygon))
        throw DomainError("mutation at " + pt(A) + " does not produce a convex polygon");
    if (m.result.area() != d.area()) throw CheckFailure("mutation changed the area", 0);
    m.result.validate();
    return m;
}

BaseDiagram toric_blowup(const BaseDiagram& d, std::size_t vertex, const Rational& size) {
    if (vertex >= d.polygon.size()) throw DomainError("vertex index out of range");
    if (d.ray_at_vertex(vertex)) throw DomainError("cannot blow up a vertex carrying a ray");
    if (size <= 0) throw DomainError("blowup size must be positive");
    const auto& P = d.polygon;
    const std::size_t n = P.size();
    auto [e1, e2] = corner_edges(P, vertex);
    Integer det = cross(e1, e2);
    if (det != 1 && det != -1) throw DomainError("corner " + pt(P[vertex]) + " is not smooth");
    const RPoint a = P[vertex] + size * to_rpoint(e1), b = P[vertex] + size * to_rpoint(e2);
    // the cut must stay inside both edges
    auto within = [&](const RPoint& q, const RPoint& from, const RPoint& to) -> bool {
        RPoint e = to - from, w = q - from;
        Rational t = e.x != 0 ? w.x / e.x : w.y / e.y;
        return t > 0 && t <= 1;
    };
    if (!within(a, P[vertex], P[next(vertex, n)]) || !within(b, P[vertex], P[prev(vertex, n)]))
        throw DomainError("blowup larger than the adjacent edge");
    std::vector<RPoint> poly;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == vertex) {
            poly.push_back(b);
            poly.push_back(a);
        } else {
            poly.push_back(P[k]);
        }
    }
    BaseDiagram out = assemble(std::move(poly), rays_at(d));
    out.validate();
    return out;
}

bool lattice_equivalent(const BaseDiagram& a, const BaseDiagram& b) {
    const std::size_t n = a.polygon.size();
    if (n != b.polygon.size() || a.rays.size() != b.rays.size()) return false;
    auto edge = [](const std::vector<RPoint>& P, std::size_t i) -> RPoint { return P[(i + 1) % P.size()] - P[i]; };
    for (int orient = 0; orient < 2; ++orient) {
        std::vector<RPoint> Q = b.polygon;
        std::vector<std::size_t> qidx(n);
        for (std::size_t i = 0; i < n; ++i) qidx[i] = i;
        if (orient) {
            std::reverse(Q.begin(), Q.end());
            std::reverse(qidx.begin(), qidx.end());
        }
        for (std::size_t shift = 0; shift < n; ++shift) {
            // candidate linear part from the first two edges
            RPoint e0 = edge(a.polygon, 0), e1 = edge(a.polygon, 1);
            RPoint f0 = edge(Q, shift % n), f1 = edge(Q, (shift + 1) % n);
            Rational det = cross(e0, e1);
            if (det == 0) continue;
            // M = [f0 f1] [e0 e1]^{-1}
            Rational m00 = (f0.x * e1.y - f1.x * e0.y) / det, m01 = (f1.x * e0.x - f0.x * e1.x) / det;
            Rational m10 = (f0.y * e1.y - f1.y * e0.y) / det, m11 = (f1.y * e0.x - f0.y * e1.x) / det;
            if (m00.get_den() != 1 || m01.get_den() != 1 || m10.get_den() != 1 || m11.get_den() != 1) continue;
            IMat2 M{m00.get_num(), m01.get_num(), m10.get_num(), m11.get_num()};
            if (M.det() != 1 && M.det() != -1) continue;
            RPoint t = Q[shift] - M.apply(a.polygon[0]);
            if (t.x.get_den() != 1 || t.y.get_den() != 1) continue;
            bool ok = true;
            for (std::size_t i = 0; i < n && ok; ++i) ok = M.apply(a.polygon[i]) + t == Q[(shift + i) % n];
            if (!ok) continue;
            for (const auto& r : a.rays) {
                std::size_t target = qidx[(shift + r.anchor) % n];
                auto br = b.ray_at_vertex(target);
                if (!br || b.rays[*br].direction != M * r.direction || b.rays[*br].nodes != r.nodes) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
    }
    return false;
}

std::string to_svg(const BaseDiagram& d) {
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (const auto& p : d.polygon) {
        xmin = std::min(xmin, p.x.get_d());
        xmax = std::max(xmax, p.x.get_d());
        ymin = std::min(ymin, p.y.get_d());
        ymax = std::max(ymax, p.y.get_d());
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const double scale = 400.0 / span;
    auto X = [&](double x) -> double { return 20 + (x - xmin) * scale; };
    auto Y = [&](double y) -> double { return 20 + (ymax - y) * scale; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << X(xmax) + 20 << "\" height=\"" << Y(ymin) + 20
       << "\">\n<polygon fill=\"#eef\" stroke=\"black\" points=\"";
    for (const auto& p : d.polygon) os << X(p.x.get_d()) << "," << Y(p.y.get_d()) << " ";
    os << "\"/>\n";
    for (const auto& r : d.rays) {
        const auto& a = d.polygon[r.anchor];
        double dx = r.direction.x.get_d(), dy = r.direction.y.get_d();
        double len = std::sqrt(dx * dx + dy * dy);
        double l = 0.25 * span / len;
        os << "<line stroke=\"red\" stroke-dasharray=\"4 3\" x1=\"" << X(a.x.get_d()) << "\" y1=\"" << Y(a.y.get_d())
           << "\" x2=\"" << X(a.x.get_d() + l * dx) << "\" y2=\"" << Y(a.y.get_d() + l * dy) << "\"/>\n";
        os << "<text font-size=\"12\" x=\"" << X(a.x.get_d() + l * dx) + 4 << "\" y=\"" << Y(a.y.get_d() + l * dy)
           << "\">" << r.nodes << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace stair
