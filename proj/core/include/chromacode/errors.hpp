#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromacode {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad arguments or malformed input data.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Instance exceeds a vertex/dimension budget or a time limit.
class GuardExceeded : public Error {
public:
    GuardExceeded(const std::string& what, std::string reason)
        : Error(what), reason_(std::move(reason)) {}
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

class TimeoutExceeded : public GuardExceeded {
public:
    explicit TimeoutExceeded(const std::string& what) : GuardExceeded(what, "timeout") {}
};

// Input outside the support or the scope of an operation.
class UnsupportedInput : public Error {
public:
    using Error::Error;
};

class AmbiguityError : public Error {
public:
    using Error::Error;
};

// Reads CHROMACODE_GUARD; returns `fallback` when unset or unparsable.
std::size_t guard_from_env(std::size_t fallback);

void check_guard(std::size_t size, std::size_t guard, const std::string& what);

}  // namespace chromacode
