#include "stair/error.hpp"
#include "stair/latticepaths.hpp"

#include <numeric>
#include <sstream>

namespace stair {

std::vector<LPoint> LatticePath::edges() const {
    std::vector<LPoint> e;
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) e.push_back(vertices[i + 1] - vertices[i]);
    return e;
}

void LatticePath::validate() const {
    if (vertices.empty()) throw DomainError("empty lattice path");
    if (vertices.front().x != 0) throw DomainError("lattice path must start on the y-axis");
    if (vertices.back().y != 0) throw DomainError("lattice path must end on the x-axis");
    for (const auto& v : vertices)
        if (v.x < 0 || v.y < 0) throw DomainError("lattice path leaves the first quadrant");
    auto e = edges();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i].x == 0 && e[i].y == 0) throw DomainError("lattice path has a repeated vertex");
        if (e[i].x <= 0 && e[i].y >= 0) throw DomainError("lattice path edge points away from the region");
        if (i + 1 < e.size() && cross(e[i], e[i + 1]) > 0) throw DomainError("lattice path is not convex");
    }
}

std::vector<LPoint> LatticePath::region() const {
    std::vector<LPoint> poly{{0, 0}};
    for (auto it = vertices.rbegin(); it != vertices.rend(); ++it)
        if (poly.back() != *it) poly.push_back(*it);
    while (poly.size() > 1 && poly.back() == poly.front()) poly.pop_back();
    return poly;
}

ConvexRegion ConvexRegion::from_lattice(const std::vector<LPoint>& poly) {
    ConvexRegion r;
    r.vertices = make_ccw(to_rpoly(poly));
    return r;
}

RPoint ConvexRegion::support_point(const LPoint& nu) const {
    if (vertices.empty()) throw DomainError("empty region");
    RPoint n = to_rpoint(nu);
    const RPoint* best = &vertices[0];
    Rational bv = cross(n, vertices[0]);
    for (const auto& p : vertices) {
        Rational v = cross(n, p);
        if (v > bv || (v == bv && p < *best)) {
            bv = v;
            best = &p;
        }
    }
    return *best;
}

Rational ConvexRegion::support(const LPoint& nu) const { return cross(to_rpoint(nu), support_point(nu)); }

namespace {

using i128 = __int128;

// sum_{i=0}^{n-1} floor((a i + b) / m), m > 0, n >= 0
Integer floor_sum(Integer n, Integer m, Integer a, Integer b) {
    Integer ans = 0;
    while (true) {
        if (a < 0 || a >= m) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
            ans += n * (n - 1) / 2 * q;
            a -= q * m;
        }
        if (b < 0 || b >= m) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
            ans += n * q;
            b -= q * m;
        }
        Integer y_max = a * n + b;
        if (y_max < m) break;
        n = y_max / m;
        b = y_max % m;
        std::swap(m, a);
    }
    return ans;
}

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

}  // namespace

Integer lattice_point_count_pick(const LatticePath& path) {
    path.validate();
    auto poly = path.region();
    // Pick with doubled boundary also covers degenerate (segment or point) regions.
    Integer a2 = 0, bd = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const LPoint& p = poly[i];
        const LPoint& q = poly[(i + 1) % poly.size()];
        a2 += big(p.x) * big(q.y) - big(p.y) * big(q.x);
        bd += big(std::gcd(q.x - p.x, q.y - p.y));
    }
    a2 = abs(a2);
    return (a2 - bd) / 2 + 1 + bd;
}

Integer lattice_point_count(const LatticePath& path) {
    path.validate();
    auto e = path.edges();
    for (const auto& d : e)
        if (d.x < 0) return lattice_point_count_pick(path);
    // columns x = 0 .. x1-1 from each non-vertical edge, then the last column
    Integer total = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i].x == 0) continue;
        const LPoint& a = path.vertices[i];
        Integer dx = big(e[i].x), dy = big(e[i].y);
        total += floor_sum(dx, dx, dy, big(a.y) * dx) + dx;
    }
    std::int64_t x1 = path.vertices.back().x, top = 0;
    for (const auto& v : path.vertices)
        if (v.x == x1) top = std::max(top, v.y);
    return total + big(top) + 1;
}

Rational omega_length(const LatticePath& path, const ConvexRegion& omega) {
    path.validate();
    Rational total = 0;
    for (const auto& nu : path.edges()) total += omega.support(nu);
    return total;
}

std::string to_svg(const LatticePath& path, const ConvexRegion* omega) {
    std::int64_t w = 1, h = 1;
    for (const auto& v : path.vertices) {
        w = std::max(w, v.x);
        h = std::max(h, v.y);
    }
    const double scale = 400.0 / static_cast<double>(std::max(w, h));
    auto X = [&](double x) { return 20 + x * scale; };
    auto Y = [&](double y) { return 20 + (static_cast<double>(h) - y) * scale; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << X(static_cast<double>(w)) + 20 << "\" height=\""
       << Y(0) + 20 << "\">\n";
    if (omega) {
        os << "  <polygon fill=\"#dde8f4\" stroke=\"#557\" points=\"";
        for (const auto& p : omega->vertices) os << X(p.x.get_d()) << "," << Y(p.y.get_d()) << " ";
        os << "\"/>\n";
    }
    os << "  <polygon fill=\"none\" stroke=\"#b22\" stroke-width=\"2\" points=\"";
    for (const auto& p : path.region()) os << X(static_cast<double>(p.x)) << "," << Y(static_cast<double>(p.y)) << " ";
    os << "\"/>\n";
    for (const auto& p : path.vertices)
        os << "  <circle r=\"3\" cx=\"" << X(static_cast<double>(p.x)) << "\" cy=\"" << Y(static_cast<double>(p.y))
           << "\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace stair
