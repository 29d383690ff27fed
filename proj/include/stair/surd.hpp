#pragma once

#include "stair/rational.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace stair {

// Exact element x + y*sqrt(D) of a real quadratic field, D square-free (D = 0 for rationals).
// Arithmetic between two different fields throws DomainError.
class QuadraticSurd {
public:
    QuadraticSurd() = default;
    QuadraticSurd(const Rational& x);  // NOLINT: rationals embed implicitly
    QuadraticSurd(long x) : QuadraticSurd(Rational(x)) {}  // NOLINT
    QuadraticSurd(const Rational& x, const Rational& y, const Integer& D);

    // (p + q*sqrt(D)) / r
    static QuadraticSurd from_pqDr(const Integer& p, const Integer& q, const Integer& D, const Integer& r);

    const Rational& rational_part() const { return x_; }
    const Rational& surd_part() const { return y_; }
    const Integer& D() const { return D_; }
    bool is_rational() const { return D_ == 0; }

    // canonical (p + q*sqrt(D)) / r with gcd(p, q, r) = 1, r > 0
    Integer p() const;
    Integer q() const;
    Integer r() const;

    int sign() const;
    QuadraticSurd conjugate() const;
    Rational norm() const;  // x^2 - y^2 D
    Rational to_rational() const;  // throws unless rational

    QuadraticSurd operator-() const;
    QuadraticSurd& operator+=(const QuadraticSurd& o);
    QuadraticSurd& operator-=(const QuadraticSurd& o);
    QuadraticSurd& operator*=(const QuadraticSurd& o);
    QuadraticSurd& operator/=(const QuadraticSurd& o);

    friend QuadraticSurd operator+(QuadraticSurd a, const QuadraticSurd& b) { return a += b; }
    friend QuadraticSurd operator-(QuadraticSurd a, const QuadraticSurd& b) { return a -= b; }
    friend QuadraticSurd operator*(QuadraticSurd a, const QuadraticSurd& b) { return a *= b; }
    friend QuadraticSurd operator/(QuadraticSurd a, const QuadraticSurd& b) { return a /= b; }

    friend bool operator==(const QuadraticSurd& a, const QuadraticSurd& b) {
        return a.x_ == b.x_ && a.y_ == b.y_ && a.D_ == b.D_;
    }
    friend int compare(const QuadraticSurd& a, const QuadraticSurd& b) { return (a - b).sign(); }
    friend bool operator<(const QuadraticSurd& a, const QuadraticSurd& b) { return compare(a, b) < 0; }
    friend bool operator>(const QuadraticSurd& a, const QuadraticSurd& b) { return compare(a, b) > 0; }
    friend bool operator<=(const QuadraticSurd& a, const QuadraticSurd& b) { return compare(a, b) <= 0; }
    friend bool operator>=(const QuadraticSurd& a, const QuadraticSurd& b) { return compare(a, b) >= 0; }

    std::string to_string() const;  // "(p+q*sqrt(D))/r"
    double to_double() const;

private:
    void canonicalize();
    void require_same_field(const QuadraticSurd& o) const;

    Rational x_{0};
    Rational y_{0};
    Integer D_{0};
};

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& s);

// Splits n >= 0 as s^2 * f with f square-free.
std::pair<Integer, Integer> square_free_split(const Integer& n);

QuadraticSurd sqrt(const Rational& n);  // n >= 0
Integer floor(const QuadraticSurd& x);
Integer ceil(const QuadraticSurd& x);
std::string to_decimal(const QuadraticSurd& x, int digits = 20);
// Decimal rounded to exactly `places` digits after the point.
std::string to_fixed(const QuadraticSurd& x, unsigned places);

// Convergents p_k/q_k of the continued fraction of x, at most `count` of them.
std::vector<Rational> convergents(const QuadraticSurd& x, std::size_t count);

// Roots of a^2 - K a + 1 = 0, larger first; empty when the discriminant is negative.
std::optional<std::pair<QuadraticSurd, QuadraticSurd>> solve_accumulation_quadratic(const Rational& K);

}  // namespace stair
