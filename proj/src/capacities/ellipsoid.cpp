#include "stair/capacities.hpp"
#include "stair/error.hpp"

#include <algorithm>
#include <numeric>

namespace stair {

namespace {

struct ScaledPair {
    std::int64_t A, B, den;  // a = A/den, b = B/den, A <= B
};

ScaledPair scale_pair(const Rational& a, const Rational& b) {
    if (a <= 0 || b <= 0) throw DomainError("ellipsoid parameters must be positive");
    Integer den;
    mpz_lcm(den.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
    Integer A = a.get_num() * (den / a.get_den());
    Integer B = b.get_num() * (den / b.get_den());
    if (!A.fits_slong_p() || !B.fits_slong_p() || !den.fits_slong_p())
        throw DomainError("ellipsoid parameters too large");
    std::int64_t x = A.get_si(), y = B.get_si();
    if (x > y) std::swap(x, y);
    return {x, y, den.get_si()};
}

std::size_t formula_length(const ScaledPair& p, std::size_t grid) {
    std::int64_t g = static_cast<std::int64_t>(grid);
    std::int64_t rows = 1 + (g * p.A) / p.B;
    std::int64_t l = ((g + 1) * rows) / 2 - 1;
    return l < 0 ? 0 : static_cast<std::size_t>(l);
}

}  // namespace

std::size_t ellipsoid_truncation_length(const Rational& a, const Rational& b, std::size_t grid) {
    return formula_length(scale_pair(a, b), grid);
}

CapacitySequence ech_ellipsoid_prefix(const Rational& a, const Rational& b, std::size_t grid, std::size_t max_len) {
    ScaledPair p = scale_pair(a, b);
    std::int64_t g = static_cast<std::int64_t>(grid);
    // Entries not in the grid are >= (grid+1) A, so every grid entry up to that bound is placed exactly.
    std::int64_t bound = (g + 1) * p.A;
    std::vector<std::int64_t> vals;
    for (std::int64_t n = 0; n <= g && n * p.B <= bound; ++n)
        for (std::int64_t m = 0; m <= g && m * p.A + n * p.B <= bound; ++m) vals.push_back(m * p.A + n * p.B);
    std::size_t len = std::min({vals.size(), formula_length(p, grid), max_len});
    if (len == 0) len = 1;  // the zero term is always exact
    std::partial_sort(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(len), vals.end());
    vals.resize(len);
    return CapacitySequence(std::move(vals), p.den, len);
}

CapacitySequence ech_ellipsoid(const Rational& a, const Rational& b, std::size_t grid) {
    return ech_ellipsoid_prefix(a, b, grid, SIZE_MAX);
}

CapacitySequence ech_ball(const Rational& b, std::size_t count) {
    if (b <= 0) throw DomainError("ball size must be positive");
    if (!b.get_num().fits_slong_p() || !b.get_den().fits_slong_p()) throw DomainError("ball size too large");
    std::int64_t bn = b.get_num().get_si();
    if (count == 0) count = 1;
    std::vector<std::int64_t> num(count);
    // N(1,1)_k = v for v(v+1)/2 <= k < (v+1)(v+2)/2
    std::int64_t v = 0, next = 1;
    for (std::size_t k = 0; k < count; ++k) {
        while (static_cast<std::int64_t>(k) >= next) {
            ++v;
            next = (v + 1) * (v + 2) / 2;
        }
        num[k] = v * bn;
    }
    return CapacitySequence(std::move(num), b.get_den().get_si(), count);
}

}  // namespace stair
