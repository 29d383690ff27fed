#pragma once

#include "stair/rational.hpp"

#include <cstddef>
#include <vector>

namespace stair {

// Weights of a >= 1 from cutting the a x 1 rectangle into squares; nonincreasing.
struct WeightExpansion {
    std::vector<Rational> weights;

    std::size_t length() const { return weights.size(); }
    Rational operator[](std::size_t i) const { return i < weights.size() ? weights[i] : Rational(0); }
};

WeightExpansion weight_expansion(const Rational& a);

// Number of weights: the sum of the continued fraction partial quotients of a.
std::size_t weight_length(const Rational& a);

// last weight = 1/q, sum of squares = a, sum = a + 1 - 1/q
bool check_weight_identities(const Rational& a, const WeightExpansion& w);
bool check_weight_identities(const Rational& a);

}  // namespace stair
