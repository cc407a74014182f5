#pragma once

#include <stdexcept>
#include <string>

namespace sylprob {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands act on different point sets.
struct DegreeMismatchError : Error {
  using Error::Error;
};

// An enumeration or quotient would exceed a configured budget.
// Budgets are hard limits; nothing is ever silently truncated.
struct BudgetError : Error {
  using Error::Error;
};

// Malformed cycle string, group expression or prime-set spec.
struct ParseError : Error {
  using Error::Error;
};

// A precondition on group containment or structure was violated.
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace sylprob
