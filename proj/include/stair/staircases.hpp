#pragma once

#include "stair/families.hpp"
#include "stair/rational.hpp"
#include "stair/surd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stair {

enum class CornerKind { inner, outer };

const char* to_string(CornerKind k);

struct Corner {
    Rational x, y;
    CornerKind kind;
    long n;
};

struct CornerPair {
    Corner inner, outer;
};

CornerPair corners(const RecurrenceFamily& fam, long n);

// Identity suite for 0 <= n <= n_max, plus the constant-table consistency checks.
// On failure `diagnostic` names the first failing identity.
bool verify_identities(const RecurrenceFamily& fam, long n_max, std::string* diagnostic = nullptr);

// B c_n - k b d_n + vol e_n = 0 for every residue, and K = per^2/vol - 2.
bool verify_constant_tables(const RecurrenceFamily& fam, std::string* diagnostic = nullptr);

// Interleaving x_out(n) < x_in(n) < x_out(n+1) for n <= n_max, and monotone convergence of the
// outer corners to (a0, sqrt(a0/vol)) with error below eps at n_max.
bool verify_structure(const RecurrenceFamily& fam, long n_max, const Rational& eps,
                      std::string* diagnostic = nullptr);

// Piecewise-linear staircase: horizontal from outer(n) to inner(n), through the origin from inner(n)
// to outer(n+1). Corners are added on demand up to any a < a0.
class StaircaseGraph {
public:
    explicit StaircaseGraph(const RecurrenceFamily& fam);

    // Exact value on [x_out(0), a0).
    Rational evaluate(const Rational& a) const;
    // Corners outer(0), inner(0), outer(1), ... with x <= a_max (plus the first corner past it).
    std::vector<Corner> corners_up_to(const Rational& a_max) const;
    const RecurrenceFamily& family() const { return *fam_; }

private:
    void extend_past(const Rational& a) const;

    const RecurrenceFamily* fam_;
    mutable std::vector<Corner> corners_;
};

StaircaseGraph staircase_graph(const RecurrenceFamily& fam);

struct OuterReport {
    bool ok = false;
    long n = 0;
    Integer k_n;
    Integer below;          // #{N(g(n), g(n+J)) terms < g(n) g(n+J)}; must be <= k_n
    bool lambda_ok = false;  // path length g(n)+g(n+J) bounds c_{k_n}(X)
    Rational y_out;
    // When k_n is small enough to materialize both sequences: N(1, x_out)_{k_n} / c_{k_n}(X).
    std::optional<Rational> ratio;
    std::string diagnostic;
};

OuterReport verify_outer_obstruction(const RecurrenceFamily& fam, long n, std::size_t materialize_limit = 20000);

}  // namespace stair
