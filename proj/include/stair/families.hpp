#pragma once

#include "stair/expansion.hpp"
#include "stair/rational.hpp"
#include "stair/surd.hpp"

#include <array>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace stair {

// Values indexed by n mod (values.size()).
struct ResidueTable {
    std::vector<long> values;

    long at(long n) const {
        long m = static_cast<long>(values.size());
        return values[static_cast<std::size_t>(((n % m) + m) % m)];
    }
    std::size_t modulus() const { return values.size(); }
};

enum class CaseId { ball, p422, b111, b1111, b1, b11 };

// One of the six staircase families: recurrence g(n+2J) = K g(n+J) - g(n) and the constant tables used
// by the identity checks, the corner formulas, the lattice paths and the mutation recursion.
class RecurrenceFamily {
public:
    CaseId id;
    std::string name;  // "(3)", "(4;2,2)", ...
    NegativeWeightExpansion expansion;
    long K = 0;
    int J = 2;
    std::vector<long> seeds;  // g(0..2J-1)
    QuadraticSurd a0;         // listed accumulation point

    // identity constants
    std::optional<long> alpha;     // J = 2
    ResidueTable beta;             // beta_n
    ResidueTable delta;            // J = 3
    ResidueTable mu;               // J = 3
    std::vector<std::array<long, 2>> club;  // J = 3: g(n)+g(n+3) = c0 g(n+1) + c1 g(n+2), by n mod 3
    ResidueTable sigma;            // mutation matrices

    // lattice path constants: expansion (B; b^k)
    long B = 0, b = 0, k_parts = 0;
    ResidueTable c_n, d_n, e_n;

    Rational vol() const { return expansion.vol(); }
    Integer g(long n) const;

    RecurrenceFamily(const RecurrenceFamily& o);
    RecurrenceFamily();

private:
    mutable std::shared_mutex mutex_;
    mutable std::vector<Integer> memo_;
};

const std::vector<const RecurrenceFamily*>& all_families();
const RecurrenceFamily& family(CaseId id);
// Accepts "(3)", "3", "(3;1,1)", "3;1^4", ...
const RecurrenceFamily& family_by_name(const std::string& name);
const RecurrenceFamily* find_family(const NegativeWeightExpansion& X);

}  // namespace stair
