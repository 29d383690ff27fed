#include "stair/error.hpp"
#include "stair/latticepaths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

namespace stair {

namespace {

struct Direction {
    LPoint nu;
    Rational weight;     // support of nu on the region
    std::int64_t scaled;  // weight times the common denominator
    double angle;        // angle of -nu in (0, 3pi/2)
};

std::vector<Direction> directions(const ConvexRegion& omega, std::int64_t reach, std::int64_t& denominator) {
    std::vector<Direction> out;
    for (std::int64_t x = -reach; x <= reach; ++x)
        for (std::int64_t y = -reach; y <= reach; ++y) {
            if ((x == 0 && y == 0) || std::gcd(x, y) != 1) continue;
            if (x <= 0 && y >= 0) continue;
            double a = std::atan2(static_cast<double>(-y), static_cast<double>(-x));
            if (a < 0) a += 2 * M_PI;
            out.push_back({{x, y}, omega.support({x, y}), 0, a});
        }
    std::sort(out.begin(), out.end(), [](const Direction& p, const Direction& q) { return p.angle > q.angle; });
    Integer den = 1;
    for (const auto& d : out) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.weight.get_den_mpz_t());
    for (auto& d : out) {
        Rational w = d.weight * den;
        d.scaled = w.get_num().get_si();
    }
    denominator = den.get_si();
    return out;
}

// Exhaustive search over convex paths whose region holds at most kmax+1 lattice points.
class PathSearch {
public:
    PathSearch(const ConvexRegion& omega, std::size_t kmax)
        : kmax_(static_cast<std::int64_t>(kmax)), dirs_(directions(omega, kmax_ + 1, den_)), best_(kmax + 1, kUnset),
          bound_(kmax + 1, kUnset), witness_(kmax + 1) {}

    void run() {
        for (std::int64_t y0 = 0; y0 <= kmax_; ++y0) {
            chain_ = {{0, y0}};
            visit({0, y0}, 0, 0, y0, 0);
        }
    }

    std::optional<Rational> best(std::size_t k) const {
        if (best_[k] == kUnset) return std::nullopt;
        Rational r(best_[k], den_);
        r.canonicalize();
        return r;
    }
    const std::vector<std::vector<LPoint>>& witness() const { return witness_; }

private:
    // a2: twice the area swept from the origin along the chain (clockwise, so nonpositive)
    // bd: boundary points along the y-axis segment and the chain
    // len: length scaled by den_
    void visit(const LPoint& p, std::size_t first_dir, std::int64_t a2, std::int64_t bd, std::int64_t len) {
        std::int64_t here = count(a2, bd, p);
        if (p.y == 0) record(here, len);
        // every completion keeps at least `here` points and at least this length
        if (len >= bound_[static_cast<std::size_t>(here - 1)]) return;
        for (std::size_t i = first_dir; i < dirs_.size(); ++i) {
            const LPoint& nu = dirs_[i].nu;
            LPoint q = p;
            for (std::int64_t t = 1;; ++t) {
                q = q + nu;
                if (q.x < 0 || q.y < 0) break;
                std::int64_t na2 = a2 + cross(p, q);
                std::int64_t nbd = bd + t;
                if (count(na2, nbd, q) > kmax_ + 1) break;
                chain_.push_back(q);
                visit(q, i + 1, na2, nbd, len + t * dirs_[i].scaled);
                chain_.pop_back();
            }
        }
    }

    // Lattice points of the polygon origin, (0, y0), chain..., q, closed back to the origin.
    static std::int64_t count(std::int64_t a2, std::int64_t bd, const LPoint& q) {
        std::int64_t b = bd + std::gcd(q.x, q.y);
        std::int64_t area = a2 < 0 ? -a2 : a2;
        return (area - b) / 2 + 1 + b;
    }

    void record(std::int64_t points, std::int64_t len) {
        std::size_t k = static_cast<std::size_t>(points - 1);
        if (k >= best_.size() || len >= best_[k]) return;
        best_[k] = len;
        witness_[k] = chain_;
        // bound_[k] = max of best_ over indices >= k
        std::int64_t m = std::numeric_limits<std::int64_t>::min();
        for (std::size_t j = best_.size(); j-- > 0;) {
            m = std::max(m, best_[j]);
            bound_[j] = m;
        }
    }

    static constexpr std::int64_t kUnset = std::numeric_limits<std::int64_t>::max();

    std::int64_t kmax_;
    std::int64_t den_ = 1;
    std::vector<Direction> dirs_;
    std::vector<std::int64_t> best_, bound_;
    std::vector<std::vector<LPoint>> witness_;
    std::vector<LPoint> chain_;
};

void check_bound(std::size_t k, std::size_t bound) {
    if (k > bound) throw DomainError("path search limited to k <= " + std::to_string(bound));
}

}  // namespace

std::vector<Rational> ck_table_via_paths(const ConvexRegion& omega, std::size_t kmax) {
    PathSearch search(omega, kmax);
    search.run();
    std::vector<Rational> out;
    for (std::size_t k = 0; k <= kmax; ++k) {
        auto v = search.best(k);
        if (!v) throw CheckFailure("no convex path with the required point count", 0);
        out.push_back(*v);
    }
    return out;
}

Rational ck_via_paths(const ConvexRegion& omega, std::size_t k, std::size_t bound) {
    check_bound(k, bound);
    return ck_table_via_paths(omega, k)[k];
}

LatticePath ck_witness(const ConvexRegion& omega, std::size_t k, std::size_t bound) {
    check_bound(k, bound);
    PathSearch search(omega, k);
    search.run();
    if (!search.best(k)) throw CheckFailure("no convex path with the required point count", 0);
    return LatticePath{search.witness()[k]};
}

}  // namespace stair
