#include "stair/error.hpp"
#include "stair/obstructions.hpp"
#include "stair/weights.hpp"

#include <algorithm>
#include <tuple>
#include <sstream>

namespace stair {

std::size_t ObstructiveClass::length() const {
    return static_cast<std::size_t>(std::count_if(m.begin(), m.end(), [](long x) { return x != 0; }));
}

bool ObstructiveClass::satisfies_conditions() const {
    long s = 0, q = 0;
    for (long x : m_tilde) {
        s += x;
        q += x * x;
    }
    for (long x : m) {
        s += x;
        q += x * x;
    }
    return s == 3 * d - 1 && q == d * d + 1;
}

std::string ObstructiveClass::to_string() const {
    std::ostringstream os;
    os << "(" << d << ";";
    for (std::size_t i = 0; i < m_tilde.size(); ++i) os << (i ? "," : " ") << m_tilde[i];
    os << " |";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : " ") << m[i];
    os << ")";
    return os.str();
}

Rational class_denominator(const ObstructiveClass& c, const NegativeWeightExpansion& X) {
    if (c.m_tilde.size() != X.parts().size()) throw DomainError("class does not match the target's parts");
    Rational den = c.d * X.b();
    for (std::size_t i = 0; i < c.m_tilde.size(); ++i) den -= c.m_tilde[i] * X.parts()[i];
    return den;
}

Rational mu(const ObstructiveClass& c, const NegativeWeightExpansion& X, const Rational& a) {
    Rational den = class_denominator(c, X);
    if (den <= 0) throw DomainError("class " + c.to_string() + " has nonpositive denominator for this target");
    WeightExpansion w = weight_expansion(a);
    Rational num = 0;
    for (std::size_t j = 0; j < c.m.size(); ++j) num += c.m[j] * w[j];
    return num / den;
}

QuadraticSurd volume_curve(const NegativeWeightExpansion& X, const Rational& a) { return sqrt(a / X.vol()); }

std::optional<QuadraticSurd> degree_bound(const NegativeWeightExpansion& X, long d, const Rational& a) {
    Rational sq = 0;
    for (const auto& b : X.parts()) sq += b * b;
    Rational dd = Rational(d) * d;
    Rational inner = X.b() * X.b() * dd / (dd + 1) - sq;
    if (inner <= 0) return std::nullopt;
    return sqrt(a / inner);
}

namespace {

class Enumerator {
public:
    Enumerator(const NegativeWeightExpansion& X, long d) : X_(X), d_(d) {
        const auto& parts = X.parts();
        for (std::size_t i = 0; i < parts.size(); ++i) same_as_prev_.push_back(i > 0 && parts[i] == parts[i - 1]);
    }

    void run(std::vector<ObstructiveClass>& out) {
        out_ = &out;
        cur_.d = d_;
        cur_.m_tilde.assign(X_.parts().size(), 0);
        cur_.m.clear();
        tilde(0, 3 * d_ - 1, d_ * d_ + 1);
    }

private:
    static bool feasible(long s, long q, long cap) { return s >= 0 && q >= s && q <= cap * s; }

    void tilde(std::size_t i, long s, long q) {
        if (i == cur_.m_tilde.size()) {
            plain(s, q, d_);
            return;
        }
        long cap = same_as_prev_[i] ? cur_.m_tilde[i - 1] : d_;
        for (long x = cap; x >= 0; --x) {
            long s2 = s - x, q2 = q - x * x;
            if (s2 < 0 || q2 < 0) continue;
            if (!feasible(s2, q2, d_)) continue;
            cur_.m_tilde[i] = x;
            tilde(i + 1, s2, q2);
        }
        cur_.m_tilde[i] = 0;
    }

    void plain(long s, long q, long cap) {
        if (s == 0 && q == 0) {
            if (class_denominator(cur_, X_) > 0) out_->push_back(cur_);
            return;
        }
        for (long x = std::min(cap, s); x >= 1; --x) {
            long s2 = s - x, q2 = q - x * x;
            if (q2 < 0 || !feasible(s2, q2, x)) continue;
            cur_.m.push_back(x);
            plain(s2, q2, x);
            cur_.m.pop_back();
        }
    }

    const NegativeWeightExpansion& X_;
    long d_;
    std::vector<bool> same_as_prev_;
    ObstructiveClass cur_;
    std::vector<ObstructiveClass>* out_ = nullptr;
};

}  // namespace

std::vector<ObstructiveClass> enumerate_classes(const NegativeWeightExpansion& X, long d_max) {
    std::vector<ObstructiveClass> out;
    for (long d = 1; d <= d_max; ++d) {
        std::vector<ObstructiveClass> level;
        Enumerator(X, d).run(level);
        std::sort(level.begin(), level.end(), [](const ObstructiveClass& p, const ObstructiveClass& q) {
            return std::tie(p.m_tilde, p.m) < std::tie(q.m_tilde, q.m);
        });
        for (auto& c : level) {
            if (!c.satisfies_conditions()) throw CheckFailure("enumerated class violates the class conditions", 0);
            out.push_back(std::move(c));
        }
    }
    return out;
}

ExactValue exact_c_at(const NegativeWeightExpansion& X, const Rational& a, long d_max) {
    if (a < 1) throw DomainError("exact_c_at needs a >= 1");
    ExactValue r;
    r.d_max = d_max;
    r.value = volume_curve(X, a);
    std::optional<Rational> best;
    for (const auto& c : enumerate_classes(X, d_max)) {
        Rational v = mu(c, X, a);
        if (v > r.value && (!best || v > *best)) {
            best = v;
            r.cls = c;
        }
    }
    if (!best) return r;  // on the volume curve as far as d_max sees; never certified
    r.value = *best;
    // A class of degree d beats v only if v^2 < a / (b^2 d^2/(d^2+1) - sum b_i^2), i.e.
    // d^2 < (sum b_i^2 + a/v^2) / (vol - a/v^2).
    Rational sq = 0;
    for (const auto& b : X.parts()) sq += b * b;
    Rational t = a / (*best * *best);
    Rational bound = (sq + t) / (X.vol() - t);
    Integer cutoff = isqrt(floor(bound));
    while (Rational(cutoff * cutoff) < bound) ++cutoff;
    r.degree_cutoff = cutoff.get_si();
    r.exact = d_max + 1 >= *r.degree_cutoff;
    return r;
}

std::optional<Rational> singular_point_of(const ObstructiveClass& c, const NegativeWeightExpansion& X,
                                          const Rational& lo, const Rational& hi, long q_factor) {
    const std::size_t len = c.length();
    if (len == 0) return std::nullopt;
    const long qmax = q_factor * static_cast<long>(len);
    std::optional<Rational> found;
    for (long q = 1; q <= qmax; ++q) {
        Integer pmin = ceil(lo * q), pmax = floor(hi * q);
        for (Integer p = pmin; p <= pmax; ++p) {
            Rational a = make_rational(p, Integer(q));
            if (a.get_den() != q || a < 1) continue;
            if (weight_length(a) != len) continue;
            if (!(QuadraticSurd(mu(c, X, a)) > volume_curve(X, a))) continue;
            if (!found || a < *found) found = a;
        }
    }
    return found;
}

}  // namespace stair
