#include "stair/error.hpp"
#include "stair/numtheory.hpp"

#include <cmath>
#include <cstdint>
#include <exception>
#include <optional>

namespace stair {

namespace {

using i128 = __int128;

// theta = (p + q sqrt(D)) / r with small integers, r > 0
struct SmallSurd {
    i128 p = 0, q = 0, D = 0, r = 1;
};

constexpr long kSmallBound = 1L << 40;

bool small(const Integer& z) { return z.fits_slong_p() && z.get_si() < kSmallBound && z.get_si() > -kSmallBound; }

std::optional<SmallSurd> to_small(const QuadraticSurd& t) {
    Integer p = t.p(), q = t.q(), r = t.r(), D = t.D();
    if (!small(p) || !small(q) || !small(r) || !small(D)) return std::nullopt;
    return SmallSurd{p.get_si(), q.get_si(), D.get_si(), r.get_si()};
}

i128 isqrt128(i128 n) {
    i128 s = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (s * s > n) --s;
    while ((s + 1) * (s + 1) <= n) ++s;
    return s;
}

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// floor(n theta) for |n| small enough that n p, n q stay far inside 128 bits
i128 floor_times(const SmallSurd& s, i128 n) {
    const i128 P = n * s.p, Q = n * s.q;
    if (Q == 0 || s.D == 0) return floor_div(P + Q * isqrt128(s.D), s.r);
    i128 root = isqrt128(Q * Q * s.D);  // floor(|Q| sqrt D), never exact for square-free D > 1
    i128 fl = Q > 0 ? root : -root - 1;
    return floor_div(P + fl, s.r);
}

bool fits(i128 n, const SmallSurd& s) {
    // keeps (n q)^2 D below 2^124
    const i128 an = n < 0 ? -n : n, aq = s.q < 0 ? -s.q : s.q;
    return an < (static_cast<i128>(1) << 40) && an * aq < (static_cast<i128>(1) << 50) && s.D < (1L << 24);
}

Integer to_integer(i128 v) {
    if (v >= INT64_MIN && v <= INT64_MAX) return Integer(static_cast<long>(v));
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    Integer hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0UL));
    Integer out = hi * Integer("18446744073709551616") + lo;
    return neg ? Integer(-out) : out;
}

}  // namespace

Integer floor_multiple(const QuadraticSurd& theta, const Rational& x) {
    if (x.get_den() == 1 && x.get_num().fits_slong_p()) {
        if (auto s = to_small(theta); s && fits(x.get_num().get_si(), *s))
            return to_integer(floor_times(*s, x.get_num().get_si()));
    }
    return floor(theta * QuadraticSurd(x));
}

QuadraticSurd c_theta(const QuadraticSurd& theta, long n) {
    if (n < 0) throw DomainError("C_theta needs n >= 0");
    Integer floors = 0;
    for (long k = 1; k <= n; ++k) floors += floor_multiple(theta, Rational(k));
    Rational tri = Rational(n) * Rational(n + 1) / 2;
    return theta * QuadraticSurd(tri) - QuadraticSurd(Rational(floors)) - QuadraticSurd(make_rational(n + 1, 2));
}

std::vector<QuadraticSurd> c_theta_series(const QuadraticSurd& theta, long n_max) {
    if (n_max < 0) throw DomainError("C_theta needs n >= 0");
    std::vector<QuadraticSurd> out;
    out.reserve(static_cast<std::size_t>(n_max + 1));
    Integer floors = 0;
    for (long n = 0; n <= n_max; ++n) {
        if (n > 0) floors += floor_multiple(theta, Rational(n));
        Rational tri = Rational(n) * Rational(n + 1) / 2;
        out.push_back(theta * QuadraticSurd(tri) - QuadraticSurd(Rational(floors)) -
                      QuadraticSurd(make_rational(n + 1, 2)));
    }
    return out;
}

SurdPair surd_pair(const Rational& per, const Rational& vol) {
    if (per <= 0 || vol <= 0) throw DomainError("per and vol must be positive");
    Rational disc = per * per - 4 * vol;
    if (disc < 0) throw DomainError("t^2 - per t + vol has no real roots; a0 is not real");
    QuadraticSurd root = sqrt(disc);
    if (root.is_rational()) throw DomainError("a0 is rational; the surd pair needs u/v irrational");
    SurdPair p;
    p.per = per;
    p.vol = vol;
    p.v = (QuadraticSurd(per) + root) / QuadraticSurd(2);
    p.u = (QuadraticSurd(per) - root) / QuadraticSurd(2);
    if (p.u * p.v != QuadraticSurd(vol) || p.u + p.v != QuadraticSurd(per))
        throw CheckFailure("surd pair does not satisfy u v = vol, u + v = per", 0);
    return p;
}

SurdPair surd_pair(const NegativeWeightExpansion& X) { return surd_pair(X.per(), X.vol()); }

Integer ehrhart_triangle(const SurdPair& pair, const Integer& T) {
    if (T < 0) throw DomainError("T must be nonnegative");
    const QuadraticSurd inv_u = QuadraticSurd(1) / pair.u, inv_v = QuadraticSurd(1) / pair.v;
    const Integer m_max = floor(Rational(T) / pair.per);
    Integer total = 0;
    const bool integral_per = pair.per.get_den() == 1 && pair.per.get_num().fits_slong_p() && T.fits_slong_p();
    auto su = to_small(inv_u), sv = to_small(inv_v);
    if (integral_per && su && sv && fits(T.get_si(), *su) && fits(T.get_si(), *sv)) {
        const long per = pair.per.get_num().get_si(), t = T.get_si();
        i128 acc = 0;
        for (long m = 0; m * per <= t; ++m) {
            const i128 rest = t - m * per;
            acc += 1 + floor_times(*sv, rest) + floor_times(*su, rest);
        }
        return to_integer(acc);
    }
    for (Integer m = 0; m <= m_max; ++m) {
        Rational rest = Rational(T) - Rational(m) * pair.per;
        total += 1 + floor_multiple(inv_v, rest) + floor_multiple(inv_u, rest);
    }
    return total;
}

Rational d_of_T(const SurdPair& pair, const Integer& T) {
    Rational t(T);
    return Rational(ehrhart_triangle(pair, T)) - t * t / (2 * pair.vol) - pair.per * t / (2 * pair.vol);
}

std::vector<Rational> d_series_reference(const SurdPair& pair, long T_max) {
    std::vector<Rational> out;
    for (long T = 0; T <= T_max; ++T) out.push_back(d_of_T(pair, Integer(T)));
    return out;
}

std::vector<Rational> d_series(const SurdPair& pair, long T_max, Exec exec) {
    if (exec == Exec::serial) return d_series_reference(pair, T_max);
    std::vector<Rational> out(static_cast<std::size_t>(T_max + 1));
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 64)
    for (long T = 0; T <= T_max; ++T) {
        try {
            out[static_cast<std::size_t>(T)] = d_of_T(pair, Integer(T));
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

bool quasipolynomial_conditions(const Rational& per, const Rational& vol) {
    Rational beta = per / vol, ab = per * per / vol;
    return beta.get_den() == 1 && beta > 0 && ab.get_den() == 1 && ab > 0;
}

bool quasipolynomial_test(const SurdPair& pair) {
    if ((pair.u / pair.v).is_rational()) throw DomainError("u/v is rational; the classification assumes it is not");
    return quasipolynomial_conditions(pair.per, pair.vol);
}

}  // namespace stair
