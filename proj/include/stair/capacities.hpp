#pragma once

#include "stair/expansion.hpp"
#include "stair/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace stair {

enum class Exec { serial, parallel };

// Nondecreasing sequence num[k]/den, k = 0..size-1, exact on [0, certified_len).
// Entries past certified_len are upper bounds only.
class CapacitySequence {
public:
    CapacitySequence() = default;
    CapacitySequence(std::vector<std::int64_t> num, std::int64_t den, std::size_t certified_len);

    std::size_t size() const { return num_.size(); }
    std::size_t certified_len() const { return certified_; }
    Rational operator[](std::size_t k) const;
    std::int64_t numerator(std::size_t k) const { return num_[k]; }
    std::int64_t denominator() const { return den_; }
    const std::vector<std::int64_t>& numerators() const { return num_; }

    CapacitySequence prefix(std::size_t n) const;
    CapacitySequence scaled(const Rational& lambda) const;
    // Same values over denominator den (must be a multiple of the current one).
    CapacitySequence with_denominator(std::int64_t den) const;

    friend bool operator==(const CapacitySequence& a, const CapacitySequence& b);

private:
    std::vector<std::int64_t> num_;
    std::int64_t den_ = 1;
    std::size_t certified_ = 0;
};

// Sorted {m a + n b : 0 <= m, n <= grid}, cut to the prefix the grid determines.
CapacitySequence ech_ellipsoid(const Rational& a, const Rational& b, std::size_t grid);
// Same, but stops after max_len terms.
CapacitySequence ech_ellipsoid_prefix(const Rational& a, const Rational& b, std::size_t grid, std::size_t max_len);
// Appendix-style truncation length floor((grid+1) floor(1 + grid a/b) / 2) - 1 with a <= b.
std::size_t ellipsoid_truncation_length(const Rational& a, const Rational& b, std::size_t grid);

// Ball B(b) = E(b, b), first `count` capacities in closed form.
CapacitySequence ech_ball(const Rational& b, std::size_t count);

// (S # T)_k = max_{m+n=k} S_m + T_n
CapacitySequence seq_sum(const CapacitySequence& S, const CapacitySequence& T);
// (S - T)_k = min_{0<=m<=window} S_{k+m} - T_m, with certification of each index.
CapacitySequence seq_sub(const CapacitySequence& S, const CapacitySequence& T, std::size_t window,
                         Exec exec = Exec::parallel);
// Naive scan over every m <= window; no certification beyond the input prefixes.
CapacitySequence seq_sub_reference(const CapacitySequence& S, const CapacitySequence& T, std::size_t window);

struct SubtractionStats {
    std::size_t window = 0;
    std::size_t certified = 0;
    std::size_t max_minimizer = 0;
};

// c(B(b)) - c(B(b1)) - ... - c(B(bn)), certified to at least `count` indices.
CapacitySequence ech_convex_toric(const NegativeWeightExpansion& X, std::size_t count,
                                  Exec exec = Exec::parallel, std::vector<SubtractionStats>* stats = nullptr);

// #{k : c_k(X) <= T}; the capacity sequence is grown until it certifiably passes T.
std::size_t cap_function(const NegativeWeightExpansion& X, const Rational& T, std::size_t count);
std::size_t cap_function(const CapacitySequence& c, const Rational& T);

// #{(m, n) >= 0 : m a + n b < T}
Integer count_below(const Integer& a, const Integer& b, const Integer& T);

// Binary cache: "STRCAP01", key, then little-endian length-prefixed numerator/denominator pairs.
void save_sequence(const std::filesystem::path& file, const std::string& key, const CapacitySequence& seq);
std::optional<CapacitySequence> load_sequence(const std::filesystem::path& file, const std::string& key);
CapacitySequence ech_convex_toric_cached(const NegativeWeightExpansion& X, std::size_t count,
                                         const std::filesystem::path& cache_dir);

}  // namespace stair
