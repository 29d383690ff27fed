#include "stair/capacities.hpp"
#include "stair/error.hpp"
#include "stair/latticepaths.hpp"
#include "stair/staircases.hpp"

#include <sstream>

namespace stair {

StaircaseGraph::StaircaseGraph(const RecurrenceFamily& fam) : fam_(&fam) {
    CornerPair c = corners(fam, 0);
    corners_ = {c.outer, c.inner};
}

StaircaseGraph staircase_graph(const RecurrenceFamily& fam) { return StaircaseGraph(fam); }

void StaircaseGraph::extend_past(const Rational& a) const {
    if (!(QuadraticSurd(a) < fam_->a0))
        throw DomainError("staircase graph is defined only below the accumulation point");
    while (corners_.back().x <= a) {
        CornerPair c = corners(*fam_, corners_.back().n + 1);
        corners_.push_back(c.outer);
        corners_.push_back(c.inner);
    }
}

Rational StaircaseGraph::evaluate(const Rational& a) const {
    if (a < corners_.front().x) throw DomainError("a is below the first outer corner");
    extend_past(a);
    // last corner with x <= a
    std::size_t i = corners_.size() - 1;
    while (corners_[i].x > a) --i;
    const Corner& c = corners_[i];
    if (c.kind == CornerKind::outer) return c.y;
    return c.y * a / c.x;
}

std::vector<Corner> StaircaseGraph::corners_up_to(const Rational& a_max) const {
    extend_past(a_max);
    std::vector<Corner> out;
    for (const auto& c : corners_) {
        out.push_back(c);
        if (c.x > a_max) break;
    }
    return out;
}

OuterReport verify_outer_obstruction(const RecurrenceFamily& fam, long n, std::size_t materialize_limit) {
    OuterReport r;
    r.n = n;
    Integer gn = fam.g(n), gJ = fam.g(n + fam.J);
    r.k_n = (gn + 1) * (gJ + 1) / 2 - 1;
    r.y_out = corners(fam, n).outer.y;

    // N(g(n), g(n+J))_{k_n} >= g(n) g(n+J) iff at most k_n terms lie strictly below g(n) g(n+J)
    r.below = count_below(gn, gJ, gn * gJ);
    bool count_ok = r.below <= r.k_n;

    LambdaCheck lam = verify_lambda(fam, n);
    r.lambda_ok = lam.ok;

    bool ratio_ok = true;
    if (r.k_n.fits_ulong_p() && r.k_n.get_ui() < materialize_limit) {
        std::size_t k = r.k_n.get_ui();
        CapacitySequence cx = ech_convex_toric(fam.expansion, k + 1);
        Rational x = corners(fam, n).outer.x;
        std::size_t grid = floor(x).get_ui() + 2;
        while (grid * grid < 2 * (floor(x).get_ui() + 1) * (k + 2)) grid *= 2;
        CapacitySequence ne = ech_ellipsoid_prefix(Rational(1), x, grid, k + 1);
        if (ne.certified_len() <= k) throw ShortfallError("ellipsoid prefix too short", ne.certified_len());
        r.ratio = ne[k] / cx[k];
        ratio_ok = *r.ratio >= r.y_out && cx[k] <= Rational(gn + gJ);
    }
    r.ok = count_ok && r.lambda_ok && ratio_ok;
    if (!r.ok) {
        std::ostringstream os;
        os << fam.name << " n=" << n << ":";
        if (!count_ok) os << " " << r.below << " ellipsoid terms below g(n)g(n+J) exceed k_n=" << r.k_n << ";";
        if (!r.lambda_ok) os << " lattice path: " << lam.diagnostic << ";";
        if (!ratio_ok) os << " materialized ratio " << to_string(*r.ratio) << " below " << to_string(r.y_out) << ";";
        r.diagnostic = os.str();
    }
    return r;
}

}  // namespace stair
