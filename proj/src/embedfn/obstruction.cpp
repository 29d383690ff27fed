#include "stair/embedfn.hpp"
#include "stair/error.hpp"

namespace stair {

std::optional<QuadraticSurd> accumulation_point(const NegativeWeightExpansion& X) {
    auto roots = solve_accumulation_quadratic(X.K());
    if (!roots) return std::nullopt;
    return roots->first;
}

namespace {

const Integer kMaxProbeDenominator = 1000000;

// sqrt(a0/vol) = v/vol with v the larger root of t^2 - per t + vol = 0 (v = sqrt(a0 vol)).
QuadraticSurd volume_value_at(const NegativeWeightExpansion& X) {
    Rational per = X.per(), vol = X.vol();
    Rational disc = per * per - 4 * vol;
    if (disc < 0) throw DomainError("no real accumulation point");
    QuadraticSurd v = (QuadraticSurd(per) + sqrt(disc)) / QuadraticSurd(2);
    return v / QuadraticSurd(vol);
}

}  // namespace

ObstructionReport staircase_obstruction(const NegativeWeightExpansion& X, const CapacitySequence& c,
                                        const Rational& probe_radius) {
    auto a0 = accumulation_point(X);
    if (!a0) throw DomainError("expansion " + X.to_string() + " has no real accumulation point");
    ObstructionReport r;
    r.a0 = *a0;
    r.volume_value = volume_value_at(X);
    if (r.volume_value * r.volume_value != r.a0 / QuadraticSurd(X.vol()))
        throw CheckFailure("volume value does not square to a0/vol", 0);
    r.lower_bound_at_a0 = QuadraticSurd(0);
    if (a0->is_rational()) {
        // a single point; nothing to bracket
        Rational a = a0->to_rational();
        if (a >= 1) {
            FunctionSample s = sample_at(c, X, a);
            r.probes.push_back({a, s.value, s.witness_k, QuadraticSurd(s.value)});
        }
    } else {
        for (const Rational& p : convergents(*a0, 40)) {
            // the ellipsoid grid is scaled by the probe's denominator; keep it in 64-bit range
            if (p.get_den() > kMaxProbeDenominator) break;
            QuadraticSurd dist = QuadraticSurd(p) - *a0;
            if (dist.sign() < 0) dist = -dist;
            if (dist > QuadraticSurd(probe_radius) || p < 1) continue;
            FunctionSample s = sample_at(c, X, p);
            QuadraticSurd bound = QuadraticSurd(p) < *a0 ? QuadraticSurd(s.value)
                                                         : QuadraticSurd(s.value) * *a0 / QuadraticSurd(p);
            r.probes.push_back({p, s.value, s.witness_k, bound});
        }
    }
    bool first = true;
    for (const auto& pr : r.probes) {
        if (first || pr.ratio > r.lower_bound) {
            r.lower_bound = pr.ratio;
            r.best_probe = pr.a;
        }
        if (first || pr.bound_at_a0 > r.lower_bound_at_a0) r.lower_bound_at_a0 = pr.bound_at_a0;
        first = false;
    }
    r.gap_positive = !r.probes.empty() && r.lower_bound_at_a0 > r.volume_value;
    return r;
}

ObstructionReport staircase_obstruction(const NegativeWeightExpansion& X, std::size_t count,
                                        const Rational& probe_radius) {
    return staircase_obstruction(X, ech_convex_toric(X, count), probe_radius);
}

}  // namespace stair
