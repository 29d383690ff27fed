#include "stair/capacities.hpp"
#include "stair/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace stair {

namespace {

std::int64_t common_den(const CapacitySequence& S, const CapacitySequence& T) {
    std::int64_t g = std::gcd(S.denominator(), T.denominator());
    __int128 l = static_cast<__int128>(S.denominator() / g) * T.denominator();
    if (l > std::numeric_limits<std::int64_t>::max()) throw DomainError("common denominator overflows");
    return static_cast<std::int64_t>(l);
}

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

}  // namespace

CapacitySequence seq_sum(const CapacitySequence& S0, const CapacitySequence& T0) {
    if (S0.size() == 0 || T0.size() == 0) throw DomainError("seq_sum needs nonempty sequences");
    std::int64_t den = common_den(S0, T0);
    const auto S = S0.with_denominator(den), T = T0.with_denominator(den);
    const auto& s = S.numerators();
    const auto& t = T.numerators();
    std::size_t len = std::min(s.size(), t.size());
    // Within a run of equal S values the smallest m leaves the largest n for T.
    std::vector<std::size_t> starts;
    for (std::size_t m = 0; m < len; ++m)
        if (m == 0 || s[m] > s[m - 1]) starts.push_back(m);
    std::vector<std::int64_t> out(len);
    for (std::size_t k = 0; k < len; ++k) {
        std::int64_t best = std::numeric_limits<std::int64_t>::min();
        for (std::size_t m : starts) {
            if (m > k) break;
            best = std::max(best, s[m] + t[k - m]);
        }
        out[k] = best;
    }
    return CapacitySequence(std::move(out), den, std::min({len, S.certified_len(), T.certified_len()}));
}

CapacitySequence seq_sub(const CapacitySequence& S0, const CapacitySequence& T0, std::size_t window, Exec exec) {
    if (S0.size() <= window || T0.size() <= window)
        throw DomainError("seq_sub window " + std::to_string(window) + " exceeds the available sequence length");
    std::int64_t den = common_den(S0, T0);
    const auto S = S0.with_denominator(den), T = T0.with_denominator(den);
    const auto& s = S.numerators();
    const auto& t = T.numerators();
    const std::size_t n = s.size();
    const std::size_t W = window;
    const std::size_t len = n - W;

    // next_end[j]: first index >= j where S strictly increases afterwards (or the last index)
    std::vector<std::size_t> next_end(n);
    next_end[n - 1] = n - 1;
    for (std::size_t j = n - 1; j-- > 0;) next_end[j] = s[j] < s[j + 1] ? j : next_end[j + 1];

    const std::size_t hi_last = W;
    const std::size_t lo_last = (4 * W + 4) / 5;  // ceil(0.8 W)
    const std::size_t lo_prev = (3 * W + 4) / 5;  // ceil(0.6 W)
    const bool have_prev = lo_prev < lo_last;
    const std::size_t hi_prev = have_prev ? lo_last - 1 : 0;

    std::vector<std::int64_t> out(len);
    std::vector<unsigned char> ok(len);
    const bool base_ok = T.certified_len() > W;

    auto kernel = [&](std::size_t k) {
        std::int64_t best = kInf, min_last = kInf, min_prev = kInf;
        std::size_t mstar = 0;
        auto visit = [&](std::size_t m) {
            std::int64_t g = s[k + m] - t[m];
            if (g < best || (g == best && m < mstar)) {
                best = g;
                mstar = m;
            }
            if (m >= lo_last && m <= hi_last) min_last = std::min(min_last, g);
            if (have_prev && m >= lo_prev && m <= hi_prev) min_prev = std::min(min_prev, g);
        };
        for (std::size_t j = next_end[k]; j - k <= W;) {
            visit(j - k);
            if (j + 1 >= n) break;
            j = next_end[j + 1];
        }
        visit(W);
        if (have_prev) visit(hi_prev);
        out[k] = best;
        bool cert = base_ok && k + W < S.certified_len() && 2 * mstar <= W && (!have_prev || min_last >= min_prev);
        ok[k] = cert ? 1 : 0;
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 512)
        for (std::size_t k = 0; k < len; ++k) kernel(k);
    } else {
        for (std::size_t k = 0; k < len; ++k) kernel(k);
    }

    std::size_t cert = 0;
    while (cert < len && ok[cert]) ++cert;
    return CapacitySequence(std::move(out), den, cert);
}

CapacitySequence seq_sub_reference(const CapacitySequence& S0, const CapacitySequence& T0, std::size_t window) {
    if (S0.size() <= window || T0.size() <= window)
        throw DomainError("seq_sub window " + std::to_string(window) + " exceeds the available sequence length");
    std::int64_t den = common_den(S0, T0);
    const auto S = S0.with_denominator(den), T = T0.with_denominator(den);
    const auto& s = S.numerators();
    const auto& t = T.numerators();
    std::size_t len = s.size() - window;
    std::vector<std::int64_t> out(len);
    for (std::size_t k = 0; k < len; ++k) {
        std::int64_t best = kInf;
        for (std::size_t m = 0; m <= window; ++m) best = std::min(best, s[k + m] - t[m]);
        out[k] = best;
    }
    std::size_t cert = 0;
    if (T.certified_len() > window)
        cert = S.certified_len() > window ? std::min(len, S.certified_len() - window) : 0;
    return CapacitySequence(std::move(out), den, cert);
}

}  // namespace stair
