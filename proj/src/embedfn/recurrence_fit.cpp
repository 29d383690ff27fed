#include "stair/embedfn.hpp"
#include "stair/error.hpp"

namespace stair {

std::vector<DetectedCorner> detect_corners(const std::vector<FunctionSample>& samples,
                                           const Rational& slope_tolerance) {
    std::vector<DetectedCorner> out;
    if (samples.size() < 3) return out;
    auto slope = [&](std::size_t i) -> Rational {
        return (samples[i + 1].value - samples[i].value) / (samples[i + 1].a - samples[i].a);
    };
    auto flat = [&](const Rational& s) -> bool { return abs(s) <= slope_tolerance; };
    for (std::size_t i = 1; i + 1 < samples.size(); ++i) {
        Rational before = slope(i - 1), after = slope(i);
        if (abs(after - before) <= slope_tolerance) continue;
        CornerKind kind;
        if (flat(before) && !flat(after))
            kind = CornerKind::inner;
        else if (!flat(before) && flat(after))
            kind = CornerKind::outer;
        else
            kind = after > before ? CornerKind::inner : CornerKind::outer;
        out.push_back({samples[i].a, samples[i].value, kind});
    }
    return out;
}

namespace {

// Solves the overdetermined system rows * x = rhs exactly; free variables are set to 0.
std::optional<std::vector<Rational>> solve_exact(std::vector<std::vector<Rational>> m) {
    const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size() - 1;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;
    std::vector<Rational> x(cols, Rational(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][cols] / m[i][pivot_col[i]];
    return x;
}

}  // namespace

std::optional<LinearRecurrence> fit_linear_recurrence(const std::vector<Integer>& seq, std::size_t max_order) {
    for (std::size_t order = 1; order <= max_order && seq.size() >= 2 * order + 1; ++order) {
        std::vector<std::vector<Rational>> m;
        for (std::size_t n = 0; n + order < seq.size(); ++n) {
            std::vector<Rational> row;
            for (std::size_t i = 0; i < order; ++i) row.emplace_back(seq[n + i]);
            row.emplace_back(seq[n + order]);
            m.push_back(std::move(row));
        }
        if (auto x = solve_exact(std::move(m))) return LinearRecurrence{order, *x};
    }
    return std::nullopt;
}

}  // namespace stair
