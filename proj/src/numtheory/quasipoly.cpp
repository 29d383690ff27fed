#include "stair/error.hpp"
#include "stair/numtheory.hpp"

#include <algorithm>

namespace stair {

Rational QuasiPoly::operator()(long T) const {
    Rational t(T);
    return quadratic * t * t + linear * t + gamma[static_cast<std::size_t>(T % modulus)];
}

std::vector<Integer> cap_values(const NegativeWeightExpansion& X, long T_max) {
    if (T_max < 0) throw DomainError("T_max must be nonnegative");
    const double t = static_cast<double>(T_max);
    std::size_t count = static_cast<std::size_t>(t * t / (2 * X.vol().get_d()) + t * X.per().get_d() / X.vol().get_d()) + 64;
    for (int attempt = 0; attempt < 6; ++attempt, count *= 2) {
        CapacitySequence c = ech_convex_toric(X, count);
        const std::size_t len = c.certified_len();
        if (len == 0 || c[len - 1] <= Rational(T_max)) continue;
        std::vector<Integer> out;
        std::size_t k = 0;
        for (long T = 0; T <= T_max; ++T) {
            while (k < len && c[k] <= Rational(T)) ++k;
            out.emplace_back(static_cast<unsigned long>(k));
        }
        return out;
    }
    throw ShortfallError("could not certify capacities past T = " + std::to_string(T_max), 0);
}

QuasiPoly fit_gamma(const std::vector<Integer>& cap, const Rational& per, const Rational& vol, long min_periods) {
    if (vol.get_den() != 1 || vol <= 0) throw DomainError("fit_gamma needs an integral volume");
    const long V = vol.get_num().get_si();
    const long T_max = static_cast<long>(cap.size()) - 1;
    QuasiPoly q;
    q.quadratic = 1 / (2 * vol);
    q.linear = per / (2 * vol);
    q.checked_to = T_max;
    std::vector<Rational> gamma;
    for (long T = 0; T <= T_max; ++T) {
        Rational t(T);
        gamma.push_back(Rational(cap[static_cast<std::size_t>(T)]) - q.quadratic * t * t - q.linear * t);
    }
    // smallest T0 with gamma(T) = gamma(T + m) for every T >= T0 in range
    auto stable_from = [&](long m) -> long {
        long T0 = 0;
        for (long T = 0; T + m <= T_max; ++T)
            if (gamma[static_cast<std::size_t>(T)] != gamma[static_cast<std::size_t>(T + m)]) T0 = T + 1;
        return T0;
    };
    auto stabilizes = [&](long m, long T0) -> bool { return T_max - T0 + 1 >= min_periods * m + m; };

    const long T_vol = stable_from(V);
    if (!stabilizes(V, T_vol))
        throw ShortfallError("cap function does not stabilize modulo vol = " + std::to_string(V) + " by T = " +
                                 std::to_string(T_max),
                             static_cast<std::size_t>(T_max));
    std::vector<long> divisors;
    for (long m = 1; m <= V; ++m)
        if (V % m == 0) divisors.push_back(m);
    for (long m : divisors) {
        const long T0 = stable_from(m);
        if (!stabilizes(m, T0)) continue;
        q.modulus = m;
        q.stable_from = T0;
        q.gamma.assign(static_cast<std::size_t>(m), Rational(0));
        for (long T = T0; T < T0 + m; ++T) q.gamma[static_cast<std::size_t>(T % m)] = gamma[static_cast<std::size_t>(T)];
        return q;
    }
    throw CheckFailure("modulus vol stabilizes but was not selected", 0);
}

bool primitive(const NegativeWeightExpansion& X) {
    if (X.b().get_den() != 1) return false;
    Integer g = X.b().get_num();
    for (const auto& p : X.parts()) {
        if (p.get_den() != 1) return false;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.get_num().get_mpz_t());
    }
    return g == 1;
}

QuasiPoly fit_gamma(const NegativeWeightExpansion& X, long T_max, long min_periods) {
    if (!primitive(X)) throw DomainError(X.to_string() + " is not primitive; its cap function need not be a quasipolynomial");
    return fit_gamma(cap_values(X, T_max), X.per(), X.vol(), min_periods);
}

}  // namespace stair
