#pragma once

#include <stdexcept>
#include <string>

namespace hadlat {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mismatched dimensions, out-of-range arguments, invalid combinations.
class DomainError : public Error {
  using Error::Error;
};

// A stated precondition does not hold for the given inputs.
class PreconditionError : public Error {
  using Error::Error;
};

// Parameters are structurally infeasible (empty admissible window, d too
// large for the covered range, ...).
class InfeasibleError : public Error {
  using Error::Error;
};

// Estimated work exceeds the configured budget.
class BudgetError : public Error {
  using Error::Error;
};

// Exact integer arithmetic would leave the guaranteed 63-bit envelope.
class OverflowError : public Error {
  using Error::Error;
};

// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public Error {
  using Error::Error;
};

}  // namespace hadlat
