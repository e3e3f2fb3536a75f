#pragma once

#include <stdexcept>
#include <string>

namespace cyclarea {

/// Input violates a documented precondition: malformed spec, infeasible side
/// list, degenerate geometry, out-of-range indices.
class InvalidInputError : public std::runtime_error {
public:
    explicit InvalidInputError(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative computation failed to converge, or a formula collapsed
/// numerically. Raised instead of silently returning NaN.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cyclarea
