#include "stair/surd.hpp"

#include "stair/error.hpp"

#include <cmath>

namespace stair {

std::pair<Integer, Integer> square_free_split(const Integer& n) {
    if (n < 0) throw DomainError("square_free_split of negative number");
    if (n == 0) return {Integer(0), Integer(0)};
    Integer s = 1, f = n;
    if (mpz_perfect_square_p(f.get_mpz_t())) return {isqrt(f), Integer(1)};
    // Trial division; values met here are small (discriminants of the recurrences).
    for (unsigned long p = 2; p <= 1000000UL; p += (p == 2 ? 1 : 2)) {
        Integer pp = Integer(p) * p;
        if (pp > f) break;
        while (mpz_divisible_p(f.get_mpz_t(), pp.get_mpz_t())) {
            f /= pp;
            s *= p;
        }
    }
    if (f > 1 && mpz_perfect_square_p(f.get_mpz_t())) {
        Integer t = isqrt(f);
        s *= t;
        f = 1;
    }
    return {s, f};
}

QuadraticSurd::QuadraticSurd(const Rational& x) : x_(x) {}

QuadraticSurd::QuadraticSurd(const Rational& x, const Rational& y, const Integer& D)
    : x_(x), y_(y), D_(D) {
    if (D_ < 0) throw DomainError("negative radicand");
    canonicalize();
}

QuadraticSurd QuadraticSurd::from_pqDr(const Integer& p, const Integer& q, const Integer& D, const Integer& r) {
    return QuadraticSurd(make_rational(p, r), make_rational(q, r), D);
}

void QuadraticSurd::canonicalize() {
    if (D_ == 0 || y_ == 0) {
        y_ = 0;
        D_ = 0;
        return;
    }
    auto [s, f] = square_free_split(D_);
    y_ *= Rational(s);
    if (f == 1) {
        x_ += y_;
        y_ = 0;
        D_ = 0;
    } else {
        D_ = f;
    }
}

void QuadraticSurd::require_same_field(const QuadraticSurd& o) const {
    if (D_ != 0 && o.D_ != 0 && D_ != o.D_)
        throw DomainError("mixed quadratic fields sqrt(" + D_.get_str() + ") and sqrt(" + o.D_.get_str() + ")");
}

Integer QuadraticSurd::r() const {
    Integer r;
    mpz_lcm(r.get_mpz_t(), x_.get_den_mpz_t(), y_.get_den_mpz_t());
    return r;
}
Integer QuadraticSurd::p() const { return x_.get_num() * (r() / x_.get_den()); }
Integer QuadraticSurd::q() const { return y_.get_num() * (r() / y_.get_den()); }

int QuadraticSurd::sign() const {
    int sx = sgn(x_), sy = sgn(y_);
    if (sy == 0) return sx;
    if (sx >= 0 && sy > 0) return 1;
    if (sx <= 0 && sy < 0) return -1;
    int c = cmp(Rational(x_ * x_), Rational(y_ * y_ * D_));
    // opposite signs: the larger magnitude wins
    return sx > 0 ? c : -c;
}

QuadraticSurd QuadraticSurd::conjugate() const {
    QuadraticSurd r = *this;
    r.y_ = -r.y_;
    return r;
}

Rational QuadraticSurd::norm() const { return x_ * x_ - y_ * y_ * D_; }

Rational QuadraticSurd::to_rational() const {
    if (D_ != 0) throw DomainError("surd is irrational: " + to_string());
    return x_;
}

QuadraticSurd QuadraticSurd::operator-() const {
    QuadraticSurd r = *this;
    r.x_ = -r.x_;
    r.y_ = -r.y_;
    return r;
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
    require_same_field(o);
    x_ += o.x_;
    y_ += o.y_;
    if (D_ == 0) D_ = o.D_;
    canonicalize();
    return *this;
}

QuadraticSurd& QuadraticSurd::operator-=(const QuadraticSurd& o) { return *this += -o; }

QuadraticSurd& QuadraticSurd::operator*=(const QuadraticSurd& o) {
    require_same_field(o);
    Integer D = D_ != 0 ? D_ : o.D_;
    Rational x = x_ * o.x_ + y_ * o.y_ * D;
    Rational y = x_ * o.y_ + y_ * o.x_;
    x_ = x;
    y_ = y;
    D_ = D;
    canonicalize();
    return *this;
}

QuadraticSurd& QuadraticSurd::operator/=(const QuadraticSurd& o) {
    require_same_field(o);
    Rational n = o.norm();
    if (n == 0) throw DomainError("division by zero surd");
    *this *= o.conjugate();
    x_ /= n;
    y_ /= n;
    canonicalize();
    return *this;
}

std::string QuadraticSurd::to_string() const {
    if (D_ == 0) return stair::to_string(x_);
    Integer P = p(), Q = q(), R = r();
    std::string s = "(" + P.get_str() + (Q < 0 ? "-" : "+");
    Integer aq = abs(Q);
    if (aq != 1) s += aq.get_str() + "*";
    s += "sqrt(" + D_.get_str() + "))";
    if (R != 1) s += "/" + R.get_str();
    return s;
}

double QuadraticSurd::to_double() const {
    return x_.get_d() + y_.get_d() * std::sqrt(D_.get_d());
}

std::ostream& operator<<(std::ostream& os, const QuadraticSurd& s) { return os << s.to_string(); }

QuadraticSurd sqrt(const Rational& n) {
    if (n < 0) throw DomainError("sqrt of negative rational");
    Integer prod = n.get_num() * n.get_den();
    auto [s, f] = square_free_split(prod);
    Rational coeff = make_rational(s, n.get_den());
    if (f == 0) return QuadraticSurd(Rational(0));
    if (f == 1) return QuadraticSurd(coeff);
    return QuadraticSurd(Rational(0), coeff, f);
}

Integer floor(const QuadraticSurd& x) {
    if (x.is_rational()) return floor(x.rational_part());
    // floor(x) = floor(a) + floor(+-sqrt(b^2 D)) up to a unit correction
    const Rational& a = x.rational_part();
    const Rational& b = x.surd_part();
    Rational sq = b * b * x.D();
    Integer root = isqrt(sq.get_num() * sq.get_den()) / sq.get_den();  // floor(sqrt(sq))
    Integer k = floor(a) + (b > 0 ? root : Integer(-root - 1));
    while (compare(x, QuadraticSurd(Rational(k))) < 0) --k;
    while (compare(x, QuadraticSurd(Rational(k + 1))) >= 0) ++k;
    return k;
}

Integer ceil(const QuadraticSurd& x) {
    Integer f = floor(x);
    return compare(x, QuadraticSurd(Rational(f))) == 0 ? f : Integer(f + 1);
}

std::string to_fixed(const QuadraticSurd& x, unsigned places) {
    Rational scale(pow10(places));
    Integer rounded = floor(x * QuadraticSurd(scale) + QuadraticSurd(Rational(1, 2)));
    return format_scaled(rounded, places);
}

std::string to_decimal(const QuadraticSurd& x, int digits) {
    if (x.is_rational()) return to_decimal(x.rational_part(), digits);
    const QuadraticSurd ax = x.sign() < 0 ? -x : x;
    Integer ip = floor(ax);
    int int_digits = ip > 0 ? static_cast<int>(ip.get_str().size()) : 0;
    int places = digits - int_digits;
    if (places < 0) places = 0;
    if (ip == 0 && x.sign() != 0) {
        QuadraticSurd t = ax;
        while (t < QuadraticSurd(make_rational(1, 10)) && places < 400) {
            t *= QuadraticSurd(10);
            ++places;
        }
    }
    return to_fixed(x, static_cast<unsigned>(places));
}

std::vector<Rational> convergents(const QuadraticSurd& x, std::size_t count) {
    std::vector<Rational> out;
    Integer hm2 = 0, hm1 = 1, km2 = 1, km1 = 0;
    QuadraticSurd t = x;
    while (out.size() < count) {
        Integer a = floor(t);
        Integer hn = a * hm1 + hm2;
        Integer kn = a * km1 + km2;
        out.push_back(make_rational(hn, kn));
        hm2 = hm1;
        hm1 = hn;
        km2 = km1;
        km1 = kn;
        QuadraticSurd frac = t - QuadraticSurd(Rational(a));
        if (frac.sign() == 0) break;
        t = QuadraticSurd(Rational(1)) / frac;
    }
    return out;
}

std::optional<std::pair<QuadraticSurd, QuadraticSurd>> solve_accumulation_quadratic(const Rational& K) {
    Rational disc = K * K - 4;
    if (disc < 0) return std::nullopt;
    QuadraticSurd root = sqrt(disc);
    QuadraticSurd half(Rational(1, 2));
    QuadraticSurd k(K);
    return std::make_pair((k + root) * half, (k - root) * half);
}

}  // namespace stair
