#include "stair/embedfn.hpp"
#include "stair/error.hpp"

#include <exception>

namespace stair {

FunctionSample sample_at(const CapacitySequence& c, const NegativeWeightExpansion& X, const Rational& a) {
    if (a < 1) throw DomainError("sample point " + to_string(a) + " is below 1");
    FunctionSample s;
    s.a = a;
    const std::size_t p = c.certified_len();
    QuadraticSurd root = sqrt(a * a + 6 * a + 1 + 8 * a * p);
    Integer k = floor((root - QuadraticSurd(1 + a)) / QuadraticSurd(2));
    if (k < 1) k = 1;
    CapacitySequence nn = ech_ellipsoid(Rational(1), a, k.get_ui());
    const std::size_t l = std::min(p, nn.size());
    if (l < 2) throw ShortfallError("capacity prefix too short to sample", l);
    // compare nn_i / c_i through cross products of the integer numerators
    using i128 = __int128;
    std::size_t best = 0;
    for (std::size_t i = 1; i < l; ++i) {
        if (c.numerator(i) <= 0) continue;
        if (best == 0 || static_cast<i128>(nn.numerator(i)) * c.numerator(best) >
                             static_cast<i128>(nn.numerator(best)) * c.numerator(i))
            best = i;
    }
    if (best == 0) throw ShortfallError("capacity prefix has no positive term", l);
    s.witness_k = best;
    s.value = nn[best] / c[best];
    s.certified = l <= c.certified_len() && l <= nn.certified_len();
    s.below_volume = QuadraticSurd(s.value) < sqrt(a / X.vol());
    return s;
}

std::vector<FunctionSample> sample_embedding_function(const CapacitySequence& c, const NegativeWeightExpansion& X,
                                                      const Rational& a_min, const Rational& a_max,
                                                      const Rational& step, Exec exec) {
    if (step <= 0) throw DomainError("step must be positive");
    if (a_min < 1) throw DomainError("grid starts below 1");
    if (a_max < a_min) throw DomainError("a_max below a_min");
    const long n = floor((a_max - a_min) / step).get_si() + 1;
    std::vector<FunctionSample> out(static_cast<std::size_t>(n));
    if (exec == Exec::serial) {
        for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = sample_at(c, X, a_min + i * step);
        return out;
    }
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = sample_at(c, X, a_min + i * step);
        } catch (...) {
#pragma omp critical
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

std::vector<FunctionSample> sample_embedding_function(const NegativeWeightExpansion& X, const Rational& a_min,
                                                      const Rational& a_max, const Rational& step, std::size_t count,
                                                      Exec exec) {
    CapacitySequence c = ech_convex_toric(X, count, exec);
    return sample_embedding_function(c, X, a_min, a_max, step, exec);
}

}  // namespace stair
