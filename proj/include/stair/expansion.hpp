#pragma once

#include "stair/geometry.hpp"
#include "stair/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace stair {

// (b; b1, ..., bn): a b-triangle with corner triangles of sizes bi removed.
class NegativeWeightExpansion {
public:
    NegativeWeightExpansion() = default;
    NegativeWeightExpansion(Rational b, std::vector<Rational> parts);

    // "4;2,1", "(4;2,1)", "(3)", "3;1^5"
    static NegativeWeightExpansion parse(std::string_view text);

    const Rational& b() const { return b_; }
    const std::vector<Rational>& parts() const { return parts_; }
    Rational per() const;
    Rational vol() const;
    Rational K() const;  // per^2/vol - 2

    NegativeWeightExpansion scaled(const Rational& lambda) const;
    std::string to_string() const;  // "(4;2,1)"

    friend bool operator==(const NegativeWeightExpansion& x, const NegativeWeightExpansion& y) {
        return x.b_ == y.b_ && x.parts_ == y.parts_;
    }

private:
    Rational b_{1};
    std::vector<Rational> parts_;
};

// Greedy expansion of a convex lattice polygon: the smallest b-triangle over unimodular frames,
// then repeated largest smooth-corner chops until the areas agree.
NegativeWeightExpansion negative_weight_expansion(const std::vector<LPoint>& polygon);

// Images of the polygon with a smooth vertex sent to the origin and its edges to the axes,
// one per smooth vertex, counterclockwise starting at the origin.
std::vector<std::vector<LPoint>> corner_positions(const std::vector<LPoint>& polygon);

}  // namespace stair
