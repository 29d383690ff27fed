#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stair {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const { return 1; }
    virtual const char* kind() const { return "error"; }
};

// Bad input: unparseable numbers, unknown case names, violated preconditions.
class DomainError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 2; }
    const char* kind() const override { return "domain"; }
};

class UnsupportedShape : public DomainError {
public:
    using DomainError::DomainError;
    const char* kind() const override { return "unsupported_shape"; }
};

// A capacity sequence could not be certified as far as requested.
class ShortfallError : public Error {
public:
    ShortfallError(const std::string& what, std::size_t achieved)
        : Error(what), achieved_(achieved) {}
    std::size_t achieved() const { return achieved_; }
    int exit_code() const override { return 3; }
    const char* kind() const override { return "shortfall"; }

private:
    std::size_t achieved_;
};

// An internal consistency check failed; `item` identifies which one.
class CheckFailure : public Error {
public:
    CheckFailure(const std::string& what, int item) : Error(what), item_(item) {}
    int item() const { return item_; }
    int exit_code() const override { return 4; }
    const char* kind() const override { return "check_failure"; }

private:
    int item_;
};

}  // namespace stair
