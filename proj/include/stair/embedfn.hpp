#pragma once

#include "stair/capacities.hpp"
#include "stair/expansion.hpp"
#include "stair/rational.hpp"
#include "stair/staircases.hpp"
#include "stair/surd.hpp"

#include <optional>
#include <vector>

namespace stair {

struct FunctionSample {
    Rational a;
    Rational value;           // max_k N(1,a)_k / c_k(X) over the usable prefix
    std::size_t witness_k = 0;
    bool certified = false;   // every index used lies in both certified prefixes
    bool below_volume = false;  // value < sqrt(a/vol); the reported estimate is then the volume curve
};

// Ratio supremum at one a, following the grid-size rule of the reference notebook:
// grid k = floor((sqrt(a^2 + 6a + 1 + 8ap) - 1 - a)/2) with p the certified length of c.
FunctionSample sample_at(const CapacitySequence& c, const NegativeWeightExpansion& X, const Rational& a);

// Grid a_min, a_min + step, ... up to and including a_max when it falls on the grid.
std::vector<FunctionSample> sample_embedding_function(const CapacitySequence& c, const NegativeWeightExpansion& X,
                                                      const Rational& a_min, const Rational& a_max,
                                                      const Rational& step, Exec exec = Exec::parallel);
std::vector<FunctionSample> sample_embedding_function(const NegativeWeightExpansion& X, const Rational& a_min,
                                                      const Rational& a_max, const Rational& step, std::size_t count,
                                                      Exec exec = Exec::parallel);

// Root > 1 of a^2 - (per^2/vol - 2) a + 1 = 0; 1 when the roots coincide; empty when they are complex.
std::optional<QuadraticSurd> accumulation_point(const NegativeWeightExpansion& X);

struct ProbeResult {
    Rational a;
    Rational ratio;
    std::size_t witness_k = 0;
    QuadraticSurd bound_at_a0;  // lower bound for c_X(a0) implied by this probe
};

struct ObstructionReport {
    QuadraticSurd a0;
    QuadraticSurd volume_value;  // sqrt(a0/vol)
    Rational lower_bound;        // best single ratio at a probe
    Rational best_probe;
    QuadraticSurd lower_bound_at_a0;
    bool gap_positive = false;
    std::vector<ProbeResult> probes;
};

// Probes are continued-fraction convergents of a0 within probe_radius. A probe p < a0 bounds
// c_X(a0) >= ratio (monotonicity); a probe p > a0 bounds c_X(a0) >= ratio * a0 / p (scaling).
// gap_positive is set only when such a bound exceeds sqrt(a0/vol) exactly.
ObstructionReport staircase_obstruction(const NegativeWeightExpansion& X, const CapacitySequence& c,
                                        const Rational& probe_radius);
ObstructionReport staircase_obstruction(const NegativeWeightExpansion& X, std::size_t count,
                                        const Rational& probe_radius);

struct DetectedCorner {
    Rational a, value;
    CornerKind kind;
};

// Grid points where the discrete slope changes by more than slope_tolerance. A change from a flat
// piece to a rising one is an inner corner, from rising to flat an outer corner.
std::vector<DetectedCorner> detect_corners(const std::vector<FunctionSample>& samples,
                                           const Rational& slope_tolerance);

struct LinearRecurrence {
    std::size_t order = 0;
    // s(n + order) = sum_i coefficients[i] * s(n + i)
    std::vector<Rational> coefficients;
};

// Minimal-order recurrence with rational coefficients fitting every term; needs len >= 2 order + 1.
std::optional<LinearRecurrence> fit_linear_recurrence(const std::vector<Integer>& seq, std::size_t max_order = 12);

}  // namespace stair
