#include "stair/error.hpp"
#include "stair/staircases.hpp"

#include <sstream>

namespace stair {

const char* to_string(CornerKind k) { return k == CornerKind::inner ? "inner" : "outer"; }

CornerPair corners(const RecurrenceFamily& fam, long n) {
    if (n < 0) throw DomainError("corner index must be >= 0");
    const long J = fam.J;
    Integer g0 = fam.g(n), gJ = fam.g(n + J), g1 = fam.g(n + 1), g1J = fam.g(n + 1 + J);
    Rational y = make_rational(gJ, g0 + gJ);
    Corner inner{make_rational(gJ * (g1 + g1J), (g0 + gJ) * g1), y, CornerKind::inner, n};
    Corner outer{make_rational(gJ, g0), y, CornerKind::outer, n};
    return {inner, outer};
}

namespace {

struct Failure {
    std::string* out;
    bool fail(const std::string& what) {
        if (out) *out = what;
        return false;
    }
};

std::string at(const char* name, long n) { return std::string(name) + " fails at n=" + std::to_string(n); }

}  // namespace

bool verify_constant_tables(const RecurrenceFamily& fam, std::string* diagnostic) {
    Failure f{diagnostic};
    const NegativeWeightExpansion& X = fam.expansion;
    if (X.K() != fam.K) return f.fail("K differs from per^2/vol - 2");
    if (fam.J == 2 && X.vol() != fam.K + 2) return f.fail("vol differs from K + 2");
    auto roots = solve_accumulation_quadratic(Rational(fam.K));
    if (!roots || roots->first != fam.a0) return f.fail("a0 is not the larger root of a^2 - K a + 1");
    std::size_t period = fam.c_n.modulus() * fam.d_n.modulus() * fam.e_n.modulus();
    for (long r = 0; r < static_cast<long>(period); ++r) {
        Rational lhs = fam.B * fam.c_n.at(r) - fam.k_parts * fam.b * fam.d_n.at(r) + X.vol() * fam.e_n.at(r);
        if (lhs != 0) return f.fail(at("B c_n - k b d_n + vol e_n = 0", r));
    }
    return true;
}

bool verify_identities(const RecurrenceFamily& fam, long n_max, std::string* diagnostic) {
    Failure f{diagnostic};
    if (!verify_constant_tables(fam, diagnostic)) return false;
    const long K = fam.K;
    auto g = [&](long n) { return fam.g(n); };
    if (fam.J == 2) {
        const long alpha = *fam.alpha;
        for (long n = 0; n <= n_max; ++n) {
            if (g(n) + g(n + 2) != fam.beta.at(n + 1) * g(n + 1)) return f.fail(at("club", n));
            if (g(n) * g(n) + g(n + 2) * g(n + 2) - K * g(n) * g(n + 2) != -alpha * fam.beta.at(n + 1))
                return f.fail(at("diamond", n));
            if (g(n) * g(n + 3) != g(n + 1) * g(n + 2) + alpha) return f.fail(at("heart", n));
            if (fam.beta.at(n) * fam.beta.at(n + 1) != fam.vol()) return f.fail(at("beta_n beta_{n+1} = vol", n));
        }
        return true;
    }
    for (long n = 0; n <= n_max; ++n) {
        const auto& c = fam.club[static_cast<std::size_t>(n % 3)];
        if (g(n) + g(n + 3) != c[0] * g(n + 1) + c[1] * g(n + 2)) return f.fail(at("club", n));
        if (g(n) * g(n) + g(n + 3) * g(n + 3) - K * g(n) * g(n + 3) != -fam.beta.at(n + 1))
            return f.fail(at("diamond", n));
        if (g(n) * g(n + 4) != g(n + 1) * g(n + 3) + fam.delta.at(n)) return f.fail(at("heart.1", n));
        if (g(n) * g(n + 5) != g(n + 2) * g(n + 3) + fam.mu.at(n)) return f.fail(at("heart.2", n));
    }
    return true;
}

bool verify_structure(const RecurrenceFamily& fam, long n_max, const Rational& eps, std::string* diagnostic) {
    Failure f{diagnostic};
    const QuadraticSurd a0 = fam.a0;
    const QuadraticSurd y0 = a0 / (a0 + QuadraticSurd(1));  // equals sqrt(a0/vol) since per = vol here
    if (y0 * y0 != a0 / QuadraticSurd(fam.vol())) return f.fail("limit height differs from sqrt(a0/vol)");
    auto dist = [](const QuadraticSurd& x) { return x.sign() < 0 ? -x : x; };
    QuadraticSurd prev_dx, prev_dy;
    for (long n = 0; n <= n_max; ++n) {
        CornerPair c = corners(fam, n), next = corners(fam, n + 1);
        if (!(c.outer.x < c.inner.x && c.inner.x < next.outer.x)) return f.fail(at("interleaving", n));
        if (c.outer.y != c.inner.y) return f.fail(at("equal heights", n));
        QuadraticSurd dx = dist(QuadraticSurd(c.outer.x) - a0), dy = dist(QuadraticSurd(c.outer.y) - y0);
        if (n > 0 && !(dx < prev_dx && dy < prev_dy)) return f.fail(at("monotone convergence", n));
        prev_dx = dx;
        prev_dy = dy;
    }
    if (n_max > 0 && !(prev_dx < QuadraticSurd(eps) && prev_dy < QuadraticSurd(eps))) {
        std::ostringstream os;
        os << "distance to the limit at n=" << n_max << " is " << to_decimal(prev_dx, 6) << ", not below eps";
        return f.fail(os.str());
    }
    return true;
}

}  // namespace stair
