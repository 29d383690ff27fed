#pragma once

#include "stair/rational.hpp"

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

namespace stair {

template <class T>
struct Vec2 {
    T x{};
    T y{};

    Vec2() = default;
    Vec2(T x_, T y_) : x(std::move(x_)), y(std::move(y_)) {}

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
    friend Vec2 operator*(const T& s, const Vec2& a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
    friend bool operator<(const Vec2& a, const Vec2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
    friend std::ostream& operator<<(std::ostream& os, const Vec2& v) { return os << "(" << v.x << "," << v.y << ")"; }
};

template <class T>
T cross(const Vec2<T>& a, const Vec2<T>& b) {
    return a.x * b.y - a.y * b.x;
}
template <class T>
T dot(const Vec2<T>& a, const Vec2<T>& b) {
    return a.x * b.x + a.y * b.y;
}

using LPoint = Vec2<std::int64_t>;  // small lattice points (paths, polygons)
using IVec = Vec2<Integer>;         // unbounded integer vectors (ATF rays)
using RPoint = Vec2<Rational>;

RPoint to_rpoint(const IVec& v);
RPoint to_rpoint(const LPoint& v);
IVec to_ivec(const LPoint& v);

IVec primitive(const IVec& v);
LPoint primitive(const LPoint& v);
// Primitive integer vector along a nonzero rational vector, same direction.
IVec primitive_direction(const RPoint& v);
std::int64_t lattice_length(const LPoint& v);  // gcd of the coordinates

// Twice the signed area.
Rational area2(const std::vector<RPoint>& poly);
std::int64_t area2(const std::vector<LPoint>& poly);

std::vector<RPoint> to_rpoly(const std::vector<LPoint>& poly);
std::vector<LPoint> make_ccw(std::vector<LPoint> poly);
std::vector<RPoint> make_ccw(std::vector<RPoint> poly);
// Drops repeated and collinear vertices.
std::vector<RPoint> simplify(const std::vector<RPoint>& poly);
bool is_strictly_convex_ccw(const std::vector<RPoint>& poly);

// Closed convex polygon (ccw) containment, boundary included.
bool contains(const std::vector<RPoint>& poly, const RPoint& p);

// Lattice counts for a convex lattice polygon via Pick.
std::int64_t boundary_points(const std::vector<LPoint>& poly);
std::int64_t interior_points(const std::vector<LPoint>& poly);
std::int64_t lattice_points(const std::vector<LPoint>& poly);

struct IMat2 {
    Integer a, b, c, d;  // [[a b] [c d]]

    IVec operator*(const IVec& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    RPoint apply(const RPoint& v) const;
    IMat2 operator*(const IMat2& m) const;
    Integer det() const { return a * d - b * c; }
    friend bool operator==(const IMat2& m, const IMat2& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
    static IMat2 identity() { return {1, 0, 0, 1}; }
    static IMat2 columns(const IVec& c1, const IVec& c2) { return {c1.x, c2.x, c1.y, c2.y}; }
    // Inverse of a matrix with det +-1.
    IMat2 unimodular_inverse() const;
};

std::ostream& operator<<(std::ostream& os, const IMat2& m);

}  // namespace stair
