#pragma once

#include <stdexcept>
#include <string>

namespace sf {

// Malformed or invalid user data (bad JSON, zero or duplicate elements).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented precondition or size cap was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation exceeded its frequency, node or enumeration budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad command name, flag or option value.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sf
