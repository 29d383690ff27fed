#include "stair/rational.hpp"

#include "stair/error.hpp"

#include <cctype>

namespace stair {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw DomainError("not an integer: '" + std::string(s) + "'");
    Integer v(std::string(s), 10);
    return neg ? Integer(-v) : v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) throw DomainError("empty rational");
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        Integer p = parse_integer(trim(s.substr(0, slash)));
        Integer q = parse_integer(trim(s.substr(slash + 1)));
        return make_rational(p, q);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view ip = s.substr(0, dot);
        std::string_view fp = s.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip.remove_prefix(1);
        if (ip.empty() && fp.empty()) throw DomainError("not a number: '" + std::string(s) + "'");
        if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw DomainError("not a number: '" + std::string(s) + "'");
        Integer whole = ip.empty() ? Integer(0) : Integer(std::string(ip), 10);
        Integer frac = fp.empty() ? Integer(0) : Integer(std::string(fp), 10);
        Integer scale = pow10(static_cast<unsigned>(fp.size()));
        Rational r = make_rational(whole * scale + frac, scale);
        return neg ? Rational(-r) : r;
    }
    return Rational(parse_integer(s));
}

std::string to_string(const Integer& x) { return x.get_str(10); }

std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str(10);
    return x.get_num().get_str(10) + "/" + x.get_den().get_str(10);
}

Integer floor(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Integer isqrt(const Integer& n) {
    if (n < 0) throw DomainError("isqrt of negative number");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

Integer pow10(unsigned e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

std::string format_scaled(const Integer& scaled, unsigned frac) {
    bool neg = scaled < 0;
    std::string digits = Integer(abs(scaled)).get_str(10);
    if (digits.size() <= frac) digits.insert(0, frac + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - frac);
    if (frac > 0) out += "." + digits.substr(digits.size() - frac);
    return neg ? "-" + out : out;
}

std::string to_decimal(const Rational& x, int digits) {
    if (x == 0) return "0";
    Rational ax = abs(x);
    // digits before the point; a leading 0 is not significant
    int int_digits = 0;
    Integer ip = floor(ax);
    if (ip > 0) int_digits = static_cast<int>(ip.get_str(10).size());
    int frac = digits - int_digits;
    if (frac < 0) frac = 0;
    // leading zeros after the point do not count as significant
    if (ip == 0) {
        Rational t = ax;
        while (t < Rational(1, 10) && frac < 400) {
            t *= 10;
            ++frac;
        }
    }
    Rational scaled = ax * Rational(pow10(static_cast<unsigned>(frac)));
    Integer rounded = floor(scaled + Rational(1, 2));
    std::string s = format_scaled(rounded, static_cast<unsigned>(frac));
    return x < 0 ? "-" + s : s;
}

}  // namespace stair
