#pragma once

#include "stair/families.hpp"
#include "stair/geometry.hpp"
#include "stair/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stair {

struct NodalRay {
    std::size_t anchor = 0;  // vertex index
    IVec direction;          // primitive, pointing into the polygon
    long nodes = 1;
};

// Convex polygon (ccw) decorated with nodal rays.
struct BaseDiagram {
    std::vector<RPoint> polygon;
    std::vector<NodalRay> rays;

    // Throws DomainError describing the first violated invariant.
    void validate() const;
    Rational area() const;
    std::optional<std::size_t> vertex_index(const RPoint& p) const;
    std::optional<std::size_t> ray_at_vertex(std::size_t vertex) const;
    std::size_t total_nodes() const;
    std::string to_string() const;
};

// Adds a one-node ray along u + v at a smooth corner with edge directions u, v.
BaseDiagram nodal_trade(const BaseDiagram& d, std::size_t vertex);

// Which piece a mutation moves: the one reached from the anchor going counterclockwise or clockwise.
enum class MutationSide { ccw, cw };

struct Mutation {
    BaseDiagram result;
    IMat2 shear;  // acts on vectors based at the anchor
    RPoint exit;  // where the ray leaves the polygon
};

// Cuts the polygon along the ray, applies the shear fixing the ray direction that aligns the two anchor
// edges to the chosen piece, and re-anchors the reversed ray at the exit point. A ray already anchored
// there in the opposite direction absorbs the nodes.
Mutation mutate(const BaseDiagram& d, std::size_t ray, MutationSide side);

// Chops a corner of the given lattice size at a smooth vertex without a ray.
BaseDiagram toric_blowup(const BaseDiagram& d, std::size_t vertex, const Rational& size);

// Equality up to an integral affine map, rays (anchor, direction, nodes) included.
bool lattice_equivalent(const BaseDiagram& a, const BaseDiagram& b);

std::string to_svg(const BaseDiagram& d);

struct PregameMove {
    enum class Kind { trade, mutate, blowup };
    Kind kind = Kind::trade;
    RPoint at;  // vertex (trade, blowup) or ray anchor (mutate)
    MutationSide side = MutationSide::ccw;
    Rational size;  // blowup only

    std::string describe() const;
};

struct PregameScript {
    CaseId id;
    BaseDiagram start;  // Delzant polygon, or the seed of another case for the blowup route
    std::vector<PregameMove> moves;
    BaseDiagram expected;  // seed of the recursion
};

PregameScript pregame_script(CaseId id);
// Every diagram along the script, starting diagram first. Throws CheckFailure naming the failing move.
std::vector<BaseDiagram> replay(const PregameScript& script);
// Final diagram of the script, checked against the expected seed.
BaseDiagram pregame(CaseId id);

// Data of the n-th diagram of the inner-corner recursion. J = 2: triangle (0,0), (b,0), (0,a) with rays
// u at (b,0), v at (0,a) and hypotenuse direction w of lattice length c. J = 3: quadrilateral
// (0,0), (b,0), P, (0,a) with rays u at (b,0), v at P, w at (0,a); top edge s (length d) from (0,a) to P,
// right edge r (length c) from P to (b,0).
struct RecursionState {
    const RecurrenceFamily* family = nullptr;
    long n = 0;
    Rational a, b, c, d;
    IVec u, v, w, r, s;
    BaseDiagram diagram;
    std::optional<IMat2> prev_shear;
    std::optional<IVec> prev_u;

    friend bool same_data(const RecursionState& x, const RecursionState& y);
};

// Reads the recursion data off a diagram in the normal position above. Throws CheckFailure otherwise.
RecursionState read_state(const RecurrenceFamily& fam, long n, const BaseDiagram& d);
RecursionState closed_form_state(const RecurrenceFamily& fam, long n);
IMat2 closed_form_matrix(const RecurrenceFamily& fam, long n);

RecursionState initial_state(CaseId id);

struct StepResult {
    RecursionState next;
    IMat2 shear;
    int items_checked = 0;
};

// Mutates the ray at (0, a_n) and asserts every item of the check list (9 for J = 2, 12 for J = 3) and
// that the generic shear equals the closed-form matrix. Failures throw CheckFailure with the item number
// (0 for the shear comparison).
StepResult recursion_step(const RecursionState& state);

// Triangle (0,0), (b_n,0), (0,a_n) from the closed forms.
std::vector<RPoint> ellipsoid_triangle(const RecurrenceFamily& fam, long n);
bool contains_ellipsoid_triangle(const RecursionState& state);
// True when the diagram is exactly that triangle.
bool fills_with_ellipsoid_triangle(const RecursionState& state);

struct RecursionRun {
    std::vector<RecursionState> states;  // n = 0..steps
    std::vector<IMat2> shears;
    int items_checked = 0;
};

// Pregame seed followed by `steps` recursion steps, each compared with the closed forms and tested for
// containment (equality when J = 2, strict when J = 3).
RecursionRun run_recursion(CaseId id, long steps);

}  // namespace stair
