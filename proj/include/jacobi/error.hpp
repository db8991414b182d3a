#pragma once

#include <stdexcept>
#include <string>

namespace jacobi {

// Malformed input: bad file, bad coordinate, mismatched dimensions.
// The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A computation was refused because it would exceed an explicit budget
// (for example 2^(g*k) enumeration work). Carries the limit so callers
// can decide to raise it.
struct FeasibilityError : std::runtime_error {
  FeasibilityError(const std::string& what, long requested_, long budget_)
      : std::runtime_error(what), requested(requested_), budget(budget_) {}
  long requested;
  long budget;
};

// An internal exactness invariant failed (for example a Molien coefficient
// that should be a nonnegative integer is not). Always a bug or a wrong
// hypothesis, never recoverable.
struct MathError : std::runtime_error {
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace jacobi
