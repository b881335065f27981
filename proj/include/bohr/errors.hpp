#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

/// Raised by tail_bound when the geometric-domination precondition fails;
/// the bound becomes available again for a larger truncation index.
struct BoundUnavailableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when bracketing finds no sign change (malformed problem).
struct NoRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Nonfinite value met during root refinement; carries the offending radius.
struct NumericError : std::runtime_error {
    NumericError(const std::string& msg, double r)
        : std::runtime_error(msg + " (r = " + std::to_string(r) + ")"), offending_r(r) {}
    double offending_r;
};

}  // namespace bohr
