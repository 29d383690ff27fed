#pragma once

#include "stair/expansion.hpp"
#include "stair/rational.hpp"
#include "stair/surd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stair {

// (d; m~_1..m~_N, m_1..m_n): m~ pairs with the parts b_i of the target, m with the weights of a.
struct ObstructiveClass {
    long d = 0;
    std::vector<long> m_tilde;
    std::vector<long> m;  // trailing zeros dropped

    std::size_t length() const;  // number of nonzero m_j
    bool satisfies_conditions() const;  // sum = 3d - 1, sum of squares = d^2 + 1
    std::string to_string() const;     // "(d; m~ | m)"
    friend bool operator==(const ObstructiveClass&, const ObstructiveClass&) = default;
};

// d b - sum m~_i b_i; the class is usable for X only when this is positive.
Rational class_denominator(const ObstructiveClass& c, const NegativeWeightExpansion& X);

// sum m_j a_j / (d b - sum m~_i b_i), a_j the weights of a. Throws DomainError for a nonpositive denominator.
Rational mu(const ObstructiveClass& c, const NegativeWeightExpansion& X, const Rational& a);

// sqrt(a/vol)
QuadraticSurd volume_curve(const NegativeWeightExpansion& X, const Rational& a);

// Upper bound sqrt(a) / sqrt(b^2 d^2/(d^2+1) - sum b_i^2) on mu of any class of degree d; empty when undefined.
std::optional<QuadraticSurd> degree_bound(const NegativeWeightExpansion& X, long d, const Rational& a);

// Ordered classes with 1 <= d <= d_max and positive denominator for X. Ordering: m nonincreasing,
// m~ nonincreasing within each run of equal parts b_i. Sorted by d, then lexicographically.
std::vector<ObstructiveClass> enumerate_classes(const NegativeWeightExpansion& X, long d_max);

struct ExactValue {
    QuadraticSurd value;                  // max(sqrt(a/vol), max mu)
    std::optional<ObstructiveClass> cls;  // attaining class, empty when the volume curve wins
    long d_max = 0;
    // True when every class of degree > d_max is bounded by the value (degree bound), so value = c_X(a).
    bool exact = false;
    // Classes of degree >= degree_cutoff cannot exceed the value. Empty when the volume curve wins.
    std::optional<long> degree_cutoff;
};

ExactValue exact_c_at(const NegativeWeightExpansion& X, const Rational& a, long d_max);

// The point with weight_length(a) = length(c) inside [lo, hi] where mu exceeds the volume curve,
// scanning p/q with q <= q_factor * length(c).
std::optional<Rational> singular_point_of(const ObstructiveClass& c, const NegativeWeightExpansion& X,
                                          const Rational& lo, const Rational& hi, long q_factor = 10);

}  // namespace stair
