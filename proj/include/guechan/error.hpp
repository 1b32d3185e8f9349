#pragma once

#include <stdexcept>
#include <string>

namespace guechan {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidDimensionError : Error {
    explicit InvalidDimensionError(const std::string& msg) : Error(msg) {}
};

struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

struct InvalidParameterError : Error {
    explicit InvalidParameterError(const std::string& msg) : Error(msg) {}
};

struct UnsupportedOrderError : Error {
    explicit UnsupportedOrderError(const std::string& msg) : Error(msg) {}
};

struct UnsupportedRegimeError : Error {
    explicit UnsupportedRegimeError(const std::string& msg) : Error(msg) {}
};

struct UnsupportedDimensionError : Error {
    explicit UnsupportedDimensionError(const std::string& msg) : Error(msg) {}
};

// Numerical failure (non-convergence, too many rejected samples, ...).
struct NumericError : Error {
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

// An analytically-real quantity came out with a non-negligible imaginary part,
// or a similar internal consistency assertion failed.
struct NumericConsistencyError : Error {
    explicit NumericConsistencyError(const std::string& msg) : Error(msg) {}
};

// Requested value is a tagged degenerate point (for example a typicality ratio
// whose denominator vanishes).
struct DegeneratePointError : Error {
    explicit DegeneratePointError(const std::string& msg) : Error(msg) {}
};

}  // namespace guechan
