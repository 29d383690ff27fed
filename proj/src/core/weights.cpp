#include "stair/weights.hpp"

#include "stair/error.hpp"

namespace stair {

WeightExpansion weight_expansion(const Rational& a) {
    if (a < 1) throw DomainError("weight expansion needs a >= 1, got " + to_string(a));
    WeightExpansion out;
    Rational x = a, y = 1;
    while (y > 0) {
        Integer k = floor(Rational(x / y));
        for (Integer i = 0; i < k; ++i) out.weights.push_back(y);
        Rational rest = x - Rational(k) * y;
        x = y;
        y = rest;
    }
    return out;
}

std::size_t weight_length(const Rational& a) {
    if (a < 1) throw DomainError("weight expansion needs a >= 1, got " + to_string(a));
    Integer p = a.get_num(), q = a.get_den();
    Integer total = 0;
    while (q != 0) {
        Integer k = p / q;
        total += k;
        Integer r = p - k * q;
        p = q;
        q = r;
    }
    return total.get_ui();
}

bool check_weight_identities(const Rational& a, const WeightExpansion& w) {
    if (w.weights.empty()) return false;
    Rational inv_q = make_rational(Integer(1), a.get_den());
    Rational sum = 0, sum_sq = 0;
    for (const auto& x : w.weights) {
        sum += x;
        sum_sq += x * x;
    }
    return w.weights.back() == inv_q && sum_sq == a && sum == a + 1 - inv_q;
}

bool check_weight_identities(const Rational& a) { return check_weight_identities(a, weight_expansion(a)); }

}  // namespace stair
