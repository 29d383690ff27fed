#pragma once

#include "stair/geometry.hpp"
#include "stair/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace stair::testing {

// Fixed seeds keep every property run reproducible.
inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5ca1ab1e);
    return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

// p/q in [lo, lo + span) with q <= max_den
inline Rational random_rational(long lo, long span, long max_den) {
    const long q = uniform(1, max_den);
    const long p = uniform(0, span * q - 1);
    return make_rational(lo * q + p, q);
}

// Convex lattice path from the y-axis to the x-axis: random edges sorted from flat to steep.
inline std::vector<LPoint> random_convex_path(int edges, long max_step) {
    std::vector<LPoint> dirs;
    while (static_cast<int>(dirs.size()) < edges) {
        LPoint e{uniform(0, max_step), -uniform(0, max_step)};
        if (e.x == 0 && e.y == 0) continue;
        dirs.push_back(e);
    }
    // flattest first: clockwise order of directions in the fourth quadrant
    std::sort(dirs.begin(), dirs.end(), [](const LPoint& a, const LPoint& b) { return cross(a, b) < 0; });
    std::int64_t y0 = 0;
    for (const auto& e : dirs) y0 -= e.y;
    std::vector<LPoint> path{{0, y0}};
    for (const auto& e : dirs) {
        LPoint next = path.back() + e;
        if (path.size() >= 2 && cross(path.back() - path[path.size() - 2], e) == 0) path.back() = next;
        else path.push_back(next);
    }
    return path;
}

}  // namespace stair::testing
