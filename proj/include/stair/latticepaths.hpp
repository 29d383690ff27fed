#pragma once

#include "stair/families.hpp"
#include "stair/geometry.hpp"
#include "stair/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace stair {

// Convex lattice path from (0, y0) on the y-axis to (x1, 0) on the x-axis.
// The region bounded by the path and the axes must be convex; edges turn clockwise.
struct LatticePath {
    std::vector<LPoint> vertices;

    std::vector<LPoint> edges() const;
    void validate() const;  // throws DomainError
    // Region polygon (0,0), (x1,0), ..., (0,y0) with repeated points removed.
    std::vector<LPoint> region() const;
};

struct ConvexRegion {
    std::vector<RPoint> vertices;  // counterclockwise

    static ConvexRegion from_lattice(const std::vector<LPoint>& poly);
    // max over the region of det[nu, p]; ties resolve to the lexicographically smallest vertex
    Rational support(const LPoint& nu) const;
    RPoint support_point(const LPoint& nu) const;
};

// Column-by-column count for x-monotone paths, Pick otherwise.
Integer lattice_point_count(const LatticePath& path);
Integer lattice_point_count_pick(const LatticePath& path);

Rational omega_length(const LatticePath& path, const ConvexRegion& omega);

// min omega_length over convex lattice paths enclosing exactly k+1 lattice points
Rational ck_via_paths(const ConvexRegion& omega, std::size_t k, std::size_t bound = 20);
std::vector<Rational> ck_table_via_paths(const ConvexRegion& omega, std::size_t kmax);
// A path attaining ck_via_paths.
LatticePath ck_witness(const ConvexRegion& omega, std::size_t k, std::size_t bound = 20);

struct LambdaData {
    Integer s, t;
    LatticePath path;
};

// Region used for the obstruction paths of each family.
ConvexRegion family_region(const RecurrenceFamily& fam);
std::vector<LPoint> family_polygon(const RecurrenceFamily& fam);

LambdaData lambda_family(const RecurrenceFamily& fam, long n);

struct LambdaCheck {
    bool ok = false;
    std::string diagnostic;
    Integer L_target, L_direct, L_pick, L_closed;
    Integer ell_target, ell_direct, ell_closed, ell_blowup;
};

LambdaCheck verify_lambda(const RecurrenceFamily& fam, long n);

std::string to_svg(const LatticePath& path, const ConvexRegion* omega = nullptr);

}  // namespace stair
