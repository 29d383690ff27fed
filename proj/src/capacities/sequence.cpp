#include "stair/capacities.hpp"
#include "stair/error.hpp"

#include <numeric>

namespace stair {

CapacitySequence::CapacitySequence(std::vector<std::int64_t> num, std::int64_t den, std::size_t certified_len)
    : num_(std::move(num)), den_(den), certified_(certified_len) {
    if (den_ <= 0) throw DomainError("capacity sequence needs a positive denominator");
    if (num_.empty() || num_[0] != 0) throw CheckFailure("capacity sequence must start at 0", 0);
    for (std::size_t k = 1; k < num_.size(); ++k)
        if (num_[k] < num_[k - 1]) throw CheckFailure("capacity sequence is not nondecreasing", 0);
    if (certified_ > num_.size()) certified_ = num_.size();
}

Rational CapacitySequence::operator[](std::size_t k) const {
    return make_rational(Integer(static_cast<long>(num_.at(k))), Integer(static_cast<long>(den_)));
}

CapacitySequence CapacitySequence::prefix(std::size_t n) const {
    if (n > num_.size()) n = num_.size();
    return CapacitySequence(std::vector<std::int64_t>(num_.begin(), num_.begin() + static_cast<std::ptrdiff_t>(n)),
                            den_, std::min(certified_, n));
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > INT64_MAX || p < INT64_MIN) throw DomainError("capacity value overflows 64 bits");
    return static_cast<std::int64_t>(p);
}

}  // namespace

CapacitySequence CapacitySequence::scaled(const Rational& lambda) const {
    if (lambda <= 0) throw DomainError("scale factor must be positive");
    if (!lambda.get_num().fits_slong_p() || !lambda.get_den().fits_slong_p())
        throw DomainError("scale factor too large");
    std::int64_t p = lambda.get_num().get_si(), q = lambda.get_den().get_si();
    std::int64_t g = std::gcd(p, den_);
    p /= g;
    std::int64_t den = checked_mul(den_ / g, q);
    std::vector<std::int64_t> num(num_.size());
    for (std::size_t k = 0; k < num_.size(); ++k) num[k] = checked_mul(num_[k], p);
    return CapacitySequence(std::move(num), den, certified_);
}

CapacitySequence CapacitySequence::with_denominator(std::int64_t den) const {
    if (den % den_ != 0) throw DomainError("new denominator must be a multiple of the old one");
    std::int64_t f = den / den_;
    if (f == 1) return *this;
    std::vector<std::int64_t> num(num_.size());
    for (std::size_t k = 0; k < num_.size(); ++k) num[k] = checked_mul(num_[k], f);
    return CapacitySequence(std::move(num), den, certified_);
}

bool operator==(const CapacitySequence& a, const CapacitySequence& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (static_cast<__int128>(a.num_[k]) * b.den_ != static_cast<__int128>(b.num_[k]) * a.den_) return false;
    return true;
}

}  // namespace stair
