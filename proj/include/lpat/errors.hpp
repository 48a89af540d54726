#pragma once

#include <stdexcept>
#include <string>

namespace lpat {

/// Input outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured size cap (bit precision, brute-force width, ...) was exceeded.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition did not hold for the given input.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A fixed point matched no row of the normal-form table.
class ClassificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lpat
