#include "stair/capacities.hpp"
#include "stair/error.hpp"

#include <cmath>

namespace stair {

namespace {

CapacitySequence subtract_balls(const NegativeWeightExpansion& X, std::size_t count, double slack, Exec exec,
                                std::vector<SubtractionStats>* stats) {
    const auto& parts = X.parts();
    const std::size_t n = parts.size();
    // Stage i subtracts c(B(b_i)) from a target of volume V_i = b^2 - sum_{j<i} b_j^2.
    // The minimizer sits near m* = k b_i^2 / (V_i - b_i^2); size windows backwards from `count`.
    std::vector<std::size_t> need(n + 1), window(n);
    need[n] = count;
    std::vector<double> V(n);
    double v = X.b().get_d() * X.b().get_d();
    for (std::size_t i = 0; i < n; ++i) {
        V[i] = v;
        v -= parts[i].get_d() * parts[i].get_d();
    }
    for (std::size_t i = n; i-- > 0;) {
        double bi2 = parts[i].get_d() * parts[i].get_d();
        double mstar = static_cast<double>(need[i + 1]) * bi2 / (V[i] - bi2);
        window[i] = static_cast<std::size_t>(std::ceil(2.0 * slack * mstar)) + 16;
        need[i] = need[i + 1] + window[i] + 1;
    }
    CapacitySequence cur = ech_ball(X.b(), need[0]);
    for (std::size_t i = 0; i < n; ++i) {
        CapacitySequence ball = ech_ball(parts[i], window[i] + 1);
        cur = seq_sub(cur, ball, window[i], exec);
        if (stats) stats->push_back({window[i], cur.certified_len(), 0});
    }
    return cur;
}

}  // namespace

CapacitySequence ech_convex_toric(const NegativeWeightExpansion& X, std::size_t count, Exec exec,
                                  std::vector<SubtractionStats>* stats) {
    if (count == 0) count = 1;
    if (X.parts().empty()) return ech_ball(X.b(), count);
    std::size_t achieved = 0;
    for (double slack : {1.25, 2.5, 5.0}) {
        if (stats) stats->clear();
        CapacitySequence c = subtract_balls(X, count, slack, exec, stats);
        if (c.certified_len() >= count) return c.prefix(std::max(count, c.certified_len()));
        achieved = std::max(achieved, c.certified_len());
    }
    throw ShortfallError("capacities of " + X.to_string() + " certified only to index " + std::to_string(achieved) +
                             " of " + std::to_string(count),
                         achieved);
}

std::size_t cap_function(const CapacitySequence& c, const Rational& T) {
    std::size_t k = 0;
    while (k < c.certified_len() && c[k] <= T) ++k;
    if (k == c.certified_len())
        throw ShortfallError("capacity prefix ends before passing T = " + to_string(T), c.certified_len());
    return k;
}

std::size_t cap_function(const NegativeWeightExpansion& X, const Rational& T, std::size_t count) {
    // c_k grows like sqrt(2 vol k); start from that estimate when the caller's count is short
    double est = T.get_d() * T.get_d() / (2.0 * X.vol().get_d()) + T.get_d() * X.per().get_d() / X.vol().get_d() + 64;
    std::size_t n = std::max(count, static_cast<std::size_t>(est));
    for (int attempt = 0; attempt < 4; ++attempt, n *= 2) {
        CapacitySequence c = ech_convex_toric(X, n);
        if (c.certified_len() > 0 && c[c.certified_len() - 1] > T) return cap_function(c, T);
    }
    throw ShortfallError("could not certify capacities past T = " + to_string(T), 0);
}

Integer count_below(const Integer& a, const Integer& b, const Integer& T) {
    if (a <= 0 || b <= 0) throw DomainError("count_below needs positive a, b");
    Integer total = 0;
    for (Integer nb = 0; nb < T; nb += b) total += (T - nb - 1) / a + 1;
    return total;
}

}  // namespace stair
