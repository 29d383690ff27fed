#include "stair/families.hpp"

#include "stair/error.hpp"

#include <mutex>

namespace stair {

RecurrenceFamily::RecurrenceFamily() = default;

RecurrenceFamily::RecurrenceFamily(const RecurrenceFamily& o)
    : id(o.id), name(o.name), expansion(o.expansion), K(o.K), J(o.J), seeds(o.seeds), a0(o.a0), alpha(o.alpha),
      beta(o.beta), delta(o.delta), mu(o.mu), club(o.club), sigma(o.sigma), B(o.B), b(o.b), k_parts(o.k_parts),
      c_n(o.c_n), d_n(o.d_n), e_n(o.e_n) {}

Integer RecurrenceFamily::g(long n) const {
    if (n < 0) throw DomainError("g(n) needs n >= 0");
    std::size_t idx = static_cast<std::size_t>(n);
    {
        std::shared_lock lock(mutex_);
        if (idx < memo_.size()) return memo_[idx];
    }
    std::unique_lock lock(mutex_);
    if (memo_.empty())
        for (long s : seeds) memo_.emplace_back(s);
    const std::size_t j = static_cast<std::size_t>(J);
    while (memo_.size() <= idx) {
        std::size_t m = memo_.size() - 2 * j;
        memo_.push_back(K * memo_[m + j] - memo_[m]);
    }
    return memo_[idx];
}

namespace {

QuadraticSurd surd(long p, long q, long D, long r) {
    return QuadraticSurd::from_pqDr(Integer(p), Integer(q), Integer(D), Integer(r));
}

std::vector<RecurrenceFamily> build() {
    std::vector<RecurrenceFamily> out(6);

    RecurrenceFamily& f3 = out[0];
    f3.id = CaseId::ball;
    f3.name = "(3)";
    f3.expansion = NegativeWeightExpansion::parse("3");
    f3.K = 7;
    f3.J = 2;
    f3.seeds = {2, 1, 1, 2};
    f3.a0 = surd(7, 3, 5, 2);
    f3.alpha = 3;
    f3.beta = {{3}};
    f3.sigma = {{1}};
    f3.B = 3;
    f3.b = 0;
    f3.k_parts = 0;
    f3.c_n = {{0}};
    f3.d_n = {{0}};
    f3.e_n = {{0}};

    RecurrenceFamily& f422 = out[1];
    f422.id = CaseId::p422;
    f422.name = "(4;2,2)";
    f422.expansion = NegativeWeightExpansion::parse("4;2,2");
    f422.K = 6;
    f422.J = 2;
    f422.seeds = {1, 1, 1, 3};
    f422.a0 = surd(3, 2, 2, 1);
    f422.alpha = 2;
    f422.beta = {{4, 2}};   // even, odd
    f422.sigma = {{2, 1}};  // even, odd
    f422.B = 4;
    f422.b = 2;
    f422.k_parts = 2;
    f422.c_n = {{0}};
    f422.d_n = {{4, 0}};
    f422.e_n = {{2, 0}};

    RecurrenceFamily& f111 = out[2];
    f111.id = CaseId::b111;
    f111.name = "(3;1,1,1)";
    f111.expansion = NegativeWeightExpansion::parse("3;1,1,1");
    f111.K = 4;
    f111.J = 2;
    f111.seeds = {1, 1, 1, 2};
    f111.a0 = surd(2, 1, 3, 1);
    f111.alpha = 1;
    f111.beta = {{3, 2}};
    f111.sigma = {{3, 2}};
    f111.B = 3;
    f111.b = 1;
    f111.k_parts = 3;
    f111.c_n = {{0, 3, 0, -3}};
    f111.d_n = {{-2, 3, 2, -3}};
    f111.e_n = {{-1, 0, 1, 0}};

    RecurrenceFamily& f1111 = out[3];
    f1111.id = CaseId::b1111;
    f1111.name = "(3;1,1,1,1)";
    f1111.expansion = NegativeWeightExpansion::parse("3;1,1,1,1");
    f1111.K = 3;
    f1111.J = 2;
    f1111.seeds = {1, 2, 1, 3};
    f1111.a0 = surd(3, 1, 5, 2);
    f1111.alpha = 1;
    f1111.beta = {{5, 1}};
    f1111.sigma = {{5, 1}};
    f1111.B = 3;
    f1111.b = 1;
    f1111.k_parts = 4;
    f1111.c_n = {{4, 0, -4, 0}};
    f1111.d_n = {{3, 0, -3, 0}};
    f1111.e_n = {{0}};

    RecurrenceFamily& f1 = out[4];
    f1.id = CaseId::b1;
    f1.name = "(3;1)";
    f1.expansion = NegativeWeightExpansion::parse("3;1");
    f1.K = 6;
    f1.J = 3;
    f1.seeds = {1, 1, 1, 1, 2, 4};
    f1.a0 = surd(3, 2, 2, 1);
    f1.beta = {{7, 4, 7}};
    f1.delta = {{1, 2, 1}};
    f1.mu = {{3}};
    f1.club = {{1, 1}, {2, 1}, {1, 2}};
    f1.sigma = {{1}};
    f1.B = 3;
    f1.b = 1;
    f1.k_parts = 1;
    f1.c_n = {{2, -1, 1, -2, 1, -1}};
    f1.d_n = {{6, -3, 3, -6, 3, -3}};
    f1.e_n = {{0}};

    RecurrenceFamily& f11 = out[5];
    f11.id = CaseId::b11;
    f11.name = "(3;1,1)";
    f11.expansion = NegativeWeightExpansion::parse("3;1,1");
    f11.K = 5;
    f11.J = 3;
    f11.seeds = {1, 1, 1, 1, 2, 3};
    f11.a0 = surd(5, 1, 21, 2);
    f11.beta = {{5, 3, 5}};
    f11.delta = {{1}};
    f11.mu = {{2, 2, 3}};
    f11.club = {{1, 1}, {1, 2}, {2, 1}};
    f11.sigma = {{2, 1, 1}};
    f11.B = 3;
    f11.b = 1;
    f11.k_parts = 2;
    f11.c_n = {{1, -2, 2, -1, 2, -2}};
    f11.d_n = {{5, -3, 3, 2, 3, -3}};
    // e_n = 1 exactly when n = 0 mod 3; the other assignment breaks B c_n - k b d_n + vol e_n = 0
    f11.e_n = {{1, 0, 0}};

    return out;
}

const std::vector<RecurrenceFamily>& registry() {
    static const std::vector<RecurrenceFamily> fams = build();
    return fams;
}

}  // namespace

const std::vector<const RecurrenceFamily*>& all_families() {
    static const std::vector<const RecurrenceFamily*> ptrs = [] {
        std::vector<const RecurrenceFamily*> v;
        for (const auto& f : registry()) v.push_back(&f);
        return v;
    }();
    return ptrs;
}

const RecurrenceFamily& family(CaseId id) {
    for (const auto& f : registry())
        if (f.id == id) return f;
    throw DomainError("unknown case id");
}

const RecurrenceFamily* find_family(const NegativeWeightExpansion& X) {
    for (const auto& f : registry())
        if (f.expansion == X) return &f;
    return nullptr;
}

const RecurrenceFamily& family_by_name(const std::string& name) {
    NegativeWeightExpansion X;
    try {
        X = NegativeWeightExpansion::parse(name);
    } catch (const DomainError&) {
        throw DomainError("unknown case '" + name + "'");
    }
    if (const RecurrenceFamily* f = find_family(X)) return *f;
    throw DomainError("unknown case '" + name + "'; expected one of (3), (4;2,2), (3;1,1,1), (3;1,1,1,1), (3;1), (3;1,1)");
}

}  // namespace stair
