#pragma once

#include "stair/capacities.hpp"
#include "stair/expansion.hpp"
#include "stair/geometry.hpp"
#include "stair/rational.hpp"
#include "stair/surd.hpp"

#include <map>
#include <string>
#include <vector>

namespace stair {

// floor(x * theta) for rational x; uses 128-bit integer arithmetic when the numbers are small.
Integer floor_multiple(const QuadraticSurd& theta, const Rational& x);

// sum_{k=0}^{n} ({k theta} - 1/2) = theta n(n+1)/2 - sum floor(k theta) - (n+1)/2
QuadraticSurd c_theta(const QuadraticSurd& theta, long n);
// C_theta(0..n_max)
std::vector<QuadraticSurd> c_theta_series(const QuadraticSurd& theta, long n_max);

// u = sqrt(vol/a0), v = sqrt(a0 vol): the two roots of t^2 - per t + vol.
struct SurdPair {
    QuadraticSurd u, v;
    Rational per, vol;

    QuadraticSurd a0() const { return v / u; }
};

// Throws DomainError when a0 is rational or not real.
SurdPair surd_pair(const Rational& per, const Rational& vol);
SurdPair surd_pair(const NegativeWeightExpansion& X);

// #{(x, y) in Z^2, x, y >= 0 : x u + y v <= T}, via the strip decomposition over m = 0..floor(T/per).
Integer ehrhart_triangle(const SurdPair& pair, const Integer& T);
// ehr(T) - T^2/(2 vol) - per T/(2 vol)
Rational d_of_T(const SurdPair& pair, const Integer& T);
// d(0..T_max); blocks of T are independent.
std::vector<Rational> d_series(const SurdPair& pair, long T_max, Exec exec = Exec::parallel);
std::vector<Rational> d_series_reference(const SurdPair& pair, long T_max);

// per/vol and per^2/vol both natural numbers.
bool quasipolynomial_conditions(const Rational& per, const Rational& vol);
// The same conditions, for a pair whose ratio u/v is irrational (checked).
bool quasipolynomial_test(const SurdPair& pair);

// Exactly one interior lattice point (convex lattice polygon, any orientation).
bool reflexive_check(const std::vector<LPoint>& polygon);
// per/vol in N, the polygon scaled by per/vol, then reflexive_check. The polygon must have the
// expansion X (checked); for the overload without a polygon X must be one of the catalogued domains.
bool scaled_reflexive_test(const NegativeWeightExpansion& X, const std::vector<LPoint>& polygon);
bool scaled_reflexive_test(const NegativeWeightExpansion& X);

struct CatalogDomain {
    std::string name;
    std::vector<LPoint> polygon;
    NegativeWeightExpansion expansion;
    bool reflexive_class = false;  // one of the sixteen reflexive polygons
};

// The sixteen reflexive polygons up to lattice equivalence.
const std::vector<CatalogDomain>& reflexive_catalog();
// The reflexive polygons followed by a few non-reflexive lattice domains.
const std::vector<CatalogDomain>& domain_catalog();

// cap(T) = T^2/(2 vol) + per T/(2 vol) + gamma[T mod modulus] for T >= stable_from.
struct QuasiPoly {
    long modulus = 1;
    Rational quadratic, linear;
    std::vector<Rational> gamma;
    long stable_from = 0;
    long checked_to = 0;

    Rational operator()(long T) const;
};

// cap_X(0..T_max) from a certified capacity prefix (grown as needed).
std::vector<Integer> cap_values(const NegativeWeightExpansion& X, long T_max);

// Integral b and parts with gcd(b, b_1, ..., b_n) = 1.
bool primitive(const NegativeWeightExpansion& X);

// Tries modulus vol and then its divisors, returning the smallest modulus that stabilizes with at least
// `min_periods` full periods inside [stable_from, T_max]. Throws ShortfallError when none does; the
// expansion overload throws DomainError unless X is primitive.
QuasiPoly fit_gamma(const NegativeWeightExpansion& X, long T_max, long min_periods = 4);
QuasiPoly fit_gamma(const std::vector<Integer>& cap, const Rational& per, const Rational& vol, long min_periods = 4);

}  // namespace stair
