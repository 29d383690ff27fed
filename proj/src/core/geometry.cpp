#include "stair/geometry.hpp"

#include "stair/error.hpp"

#include <algorithm>
#include <numeric>

namespace stair {

RPoint to_rpoint(const IVec& v) { return {Rational(v.x), Rational(v.y)}; }
RPoint to_rpoint(const LPoint& v) { return {Rational(static_cast<long>(v.x)), Rational(static_cast<long>(v.y))}; }
IVec to_ivec(const LPoint& v) { return {Integer(static_cast<long>(v.x)), Integer(static_cast<long>(v.y))}; }

IVec primitive(const IVec& v) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), v.x.get_mpz_t(), v.y.get_mpz_t());
    if (g == 0) throw DomainError("zero vector has no primitive direction");
    return {v.x / g, v.y / g};
}

LPoint primitive(const LPoint& v) {
    std::int64_t g = std::gcd(v.x, v.y);
    if (g == 0) throw DomainError("zero vector has no primitive direction");
    return {v.x / g, v.y / g};
}

IVec primitive_direction(const RPoint& v) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), v.x.get_den_mpz_t(), v.y.get_den_mpz_t());
    Rational L(l);
    Rational x = v.x * L, y = v.y * L;
    return primitive(IVec{x.get_num(), y.get_num()});
}

std::int64_t lattice_length(const LPoint& v) { return std::gcd(v.x, v.y); }

Rational area2(const std::vector<RPoint>& poly) {
    Rational s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
    return s;
}

std::int64_t area2(const std::vector<LPoint>& poly) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) s += cross(poly[i], poly[(i + 1) % poly.size()]);
    return s;
}

std::vector<RPoint> to_rpoly(const std::vector<LPoint>& poly) {
    std::vector<RPoint> out;
    out.reserve(poly.size());
    for (const auto& p : poly) out.push_back(to_rpoint(p));
    return out;
}

std::vector<LPoint> make_ccw(std::vector<LPoint> poly) {
    if (area2(poly) < 0) std::reverse(poly.begin(), poly.end());
    return poly;
}

std::vector<RPoint> make_ccw(std::vector<RPoint> poly) {
    if (area2(poly) < 0) std::reverse(poly.begin(), poly.end());
    return poly;
}

std::vector<RPoint> simplify(const std::vector<RPoint>& poly) {
    std::vector<RPoint> out;
    for (const auto& p : poly)
        if (out.empty() || out.back() != p) out.push_back(p);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    bool changed = true;
    while (changed && out.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < out.size(); ++i) {
            const RPoint& prev = out[(i + out.size() - 1) % out.size()];
            const RPoint& next = out[(i + 1) % out.size()];
            if (cross(out[i] - prev, next - out[i]) == 0) {
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return out;
}

bool is_strictly_convex_ccw(const std::vector<RPoint>& poly) {
    std::size_t n = poly.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const RPoint& a = poly[i];
        const RPoint& b = poly[(i + 1) % n];
        const RPoint& c = poly[(i + 2) % n];
        if (cross(b - a, c - b) <= 0) return false;
    }
    return true;
}

bool contains(const std::vector<RPoint>& poly, const RPoint& p) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const RPoint& a = poly[i];
        const RPoint& b = poly[(i + 1) % poly.size()];
        if (cross(b - a, p - a) < 0) return false;
    }
    return true;
}

std::int64_t boundary_points(const std::vector<LPoint>& poly) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) s += lattice_length(poly[(i + 1) % poly.size()] - poly[i]);
    return s;
}

std::int64_t interior_points(const std::vector<LPoint>& poly) {
    // Pick: 2A = 2I + B - 2
    std::int64_t a2 = area2(poly);
    if (a2 < 0) a2 = -a2;
    return (a2 - boundary_points(poly) + 2) / 2;
}

std::int64_t lattice_points(const std::vector<LPoint>& poly) { return interior_points(poly) + boundary_points(poly); }

RPoint IMat2::apply(const RPoint& v) const {
    return {Rational(a) * v.x + Rational(b) * v.y, Rational(c) * v.x + Rational(d) * v.y};
}

IMat2 IMat2::operator*(const IMat2& m) const {
    return {a * m.a + b * m.c, a * m.b + b * m.d, c * m.a + d * m.c, c * m.b + d * m.d};
}

IMat2 IMat2::unimodular_inverse() const {
    Integer dt = det();
    if (dt != 1 && dt != -1) throw DomainError("matrix is not unimodular");
    return {d * dt, -b * dt, -c * dt, a * dt};
}

std::ostream& operator<<(std::ostream& os, const IMat2& m) {
    return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
}

}  // namespace stair
