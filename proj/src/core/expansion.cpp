#include "stair/expansion.hpp"

#include "stair/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>

namespace stair {

NegativeWeightExpansion::NegativeWeightExpansion(Rational b, std::vector<Rational> parts)
    : b_(std::move(b)), parts_(std::move(parts)) {
    if (b_ <= 0) throw DomainError("expansion needs b > 0");
    for (const auto& p : parts_)
        if (p <= 0) throw DomainError("expansion parts must be positive");
    std::sort(parts_.begin(), parts_.end(), [](const Rational& x, const Rational& y) { return x > y; });
    if (vol() <= 0) throw DomainError("expansion " + to_string() + " has nonpositive volume");
}

NegativeWeightExpansion NegativeWeightExpansion::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s += c;
    if (s.empty()) throw DomainError("empty expansion");
    auto semi = s.find(';');
    Rational b = parse_rational(s.substr(0, semi));
    std::vector<Rational> parts;
    if (semi != std::string::npos) {
        std::string rest = s.substr(semi + 1);
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (item.empty()) throw DomainError("empty entry in expansion '" + std::string(text) + "'");
            long repeat = 1;
            if (auto caret = item.find('^'); caret != std::string::npos) {
                Rational r = parse_rational(item.substr(caret + 1));
                if (r.get_den() != 1 || r < 1 || r > 1000) throw DomainError("bad repeat count in '" + item + "'");
                repeat = r.get_num().get_si();
                item = item.substr(0, caret);
            }
            Rational v = parse_rational(item);
            for (long i = 0; i < repeat; ++i) parts.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return NegativeWeightExpansion(b, parts);
}

Rational NegativeWeightExpansion::per() const {
    Rational s = 3 * b_;
    for (const auto& p : parts_) s -= p;
    return s;
}

Rational NegativeWeightExpansion::vol() const {
    Rational s = b_ * b_;
    for (const auto& p : parts_) s -= p * p;
    return s;
}

Rational NegativeWeightExpansion::K() const {
    Rational p = per();
    return p * p / vol() - 2;
}

NegativeWeightExpansion NegativeWeightExpansion::scaled(const Rational& lambda) const {
    if (lambda <= 0) throw DomainError("scale factor must be positive");
    std::vector<Rational> parts;
    for (const auto& p : parts_) parts.push_back(lambda * p);
    return NegativeWeightExpansion(lambda * b_, parts);
}

std::string NegativeWeightExpansion::to_string() const {
    std::string s = "(" + stair::to_string(b_);
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i == 0 ? ";" : ",") + stair::to_string(parts_[i]);
    return s + ")";
}

namespace {

RPoint line_intersection(const LPoint& n, const Rational& c, const LPoint& m, const Rational& d) {
    // <n,x> = c, <m,x> = d
    Rational det(static_cast<long>(n.x * m.y - n.y * m.x));
    Rational x = (c * Rational(static_cast<long>(m.y)) - d * Rational(static_cast<long>(n.y))) / det;
    Rational y = (Rational(static_cast<long>(n.x)) * d - Rational(static_cast<long>(m.x)) * c) / det;
    return {x, y};
}

Rational edge_length(const RPoint& edge, const IVec& e) {
    return e.x != 0 ? Rational(edge.x / Rational(e.x)) : Rational(edge.y / Rational(e.y));
}

struct Frame {
    std::array<LPoint, 3> normals;
    std::array<Rational, 3> c;
};

std::optional<std::vector<Rational>> chop(const std::vector<RPoint>& poly, const Frame& fr) {
    std::vector<RPoint> cur;
    for (int i = 0; i < 3; ++i)
        cur.push_back(line_intersection(fr.normals[i], fr.c[i], fr.normals[(i + 1) % 3], fr.c[(i + 1) % 3]));
    cur = make_ccw(cur);
    Rational target = area2(poly);
    std::vector<Rational> parts;
    for (int iter = 0; iter < 16; ++iter) {
        if (area2(cur) == target) return parts;
        std::optional<std::pair<Rational, std::size_t>> best;
        IVec best_e1, best_e2;
        std::size_t m = cur.size();
        for (std::size_t i = 0; i < m; ++i) {
            const RPoint& V = cur[i];
            RPoint a = cur[(i + 1) % m] - V;
            RPoint bb = cur[(i + m - 1) % m] - V;
            IVec e1 = primitive_direction(a), e2 = primitive_direction(bb);
            Integer det = cross(e1, e2);
            if (det != 1 && det != -1) continue;
            RPoint r1 = to_rpoint(e1), r2 = to_rpoint(e2);
            std::optional<Rational> s;
            for (const auto& p : poly) {
                RPoint d = p - V;
                Rational v = (cross(d, r2) + cross(r1, d)) / Rational(det);
                if (!s || v < *s) s = v;
            }
            Rational lim = std::min(edge_length(a, e1), edge_length(bb, e2));
            if (*s > lim) s = lim;
            if (*s > 0 && (!best || *s > best->first)) {
                best = std::make_pair(*s, i);
                best_e1 = e1;
                best_e2 = e2;
            }
        }
        if (!best) return std::nullopt;
        auto [s, i] = *best;
        const RPoint V = cur[i];
        RPoint A = V + s * to_rpoint(best_e1);
        RPoint B = V + s * to_rpoint(best_e2);
        std::vector<RPoint> next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(i));
        next.push_back(B);
        next.push_back(A);
        next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.end());
        cur = simplify(next);
        parts.push_back(s);
    }
    return std::nullopt;
}

}  // namespace

NegativeWeightExpansion negative_weight_expansion(const std::vector<LPoint>& polygon) {
    if (polygon.size() < 3) throw UnsupportedShape("polygon needs at least three vertices");
    std::vector<RPoint> poly = simplify(make_ccw(to_rpoly(polygon)));
    if (!is_strictly_convex_ccw(poly)) throw UnsupportedShape("polygon is not convex");

    std::optional<Rational> best_b;
    std::vector<Frame> frames;
    for (std::int64_t a1 = -4; a1 <= 4; ++a1)
        for (std::int64_t a2 = -4; a2 <= 4; ++a2)
            for (std::int64_t b1 = -4; b1 <= 4; ++b1)
                for (std::int64_t b2 = -4; b2 <= 4; ++b2) {
                    LPoint n1{a1, a2}, n2{b1, b2};
                    std::int64_t det = cross(n1, n2);
                    if (det != 1 && det != -1) continue;
                    Frame fr{{n1, n2, LPoint{-a1 - b1, -a2 - b2}}, {}};
                    for (int i = 0; i < 3; ++i) {
                        std::optional<Rational> mn;
                        for (const auto& p : poly) {
                            Rational v = Rational(static_cast<long>(fr.normals[i].x)) * p.x +
                                         Rational(static_cast<long>(fr.normals[i].y)) * p.y;
                            if (!mn || v < *mn) mn = v;
                        }
                        fr.c[i] = *mn;
                    }
                    Rational b = -(fr.c[0] + fr.c[1] + fr.c[2]);
                    if (!best_b || b < *best_b) {
                        best_b = b;
                        frames.clear();
                    }
                    if (b == *best_b) frames.push_back(fr);
                }
    for (const auto& fr : frames) {
        if (auto parts = chop(poly, fr)) return NegativeWeightExpansion(*best_b, *parts);
    }
    throw UnsupportedShape("no corner-chop sequence reaches the polygon");
}

std::vector<std::vector<LPoint>> corner_positions(const std::vector<LPoint>& polygon) {
    std::vector<LPoint> P = make_ccw(polygon);
    std::size_t n = P.size();
    std::vector<std::vector<LPoint>> out;
    for (std::size_t i = 0; i < n; ++i) {
        const LPoint V = P[i];
        LPoint e1 = primitive(P[(i + 1) % n] - V);
        LPoint e2 = primitive(P[(i + n - 1) % n] - V);
        if (cross(e1, e2) != 1) continue;
        // inverse of [e1 e2] sends e1 -> (1,0), e2 -> (0,1)
        std::vector<LPoint> Q;
        for (std::size_t j = 0; j < n; ++j) {
            LPoint d = P[(i + j) % n] - V;
            Q.push_back({e2.y * d.x - e2.x * d.y, -e1.y * d.x + e1.x * d.y});
        }
        out.push_back(Q);
    }
    return out;
}

}  // namespace stair
