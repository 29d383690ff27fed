#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stair {

using Integer = mpz_class;
using Rational = mpq_class;  // gmp keeps results canonical; make_rational canonicalizes input

Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

// Accepts "p/q", integers and plain decimals ("6.9", "-0.25").
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

// Rounded to `digits` significant digits, fixed notation.
std::string to_decimal(const Rational& x, int digits = 20);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
Integer isqrt(const Integer& n);  // floor(sqrt(n)), n >= 0
Integer pow10(unsigned e);

inline int sign(const Rational& x) { return sgn(x); }
inline int sign(const Integer& x) { return sgn(x); }

// Decimal expansion of floor(x * 10^frac) with the point reinserted.
std::string format_scaled(const Integer& scaled, unsigned frac);

}  // namespace stair
