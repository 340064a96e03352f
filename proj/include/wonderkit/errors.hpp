#pragma once

#include <stdexcept>
#include <string>

namespace wk {

/// Base of every exception thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller supplied something outside an operation's precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input (JSON, rational literals, flag values).
class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An enumeration was refused because it would exceed the caller's bound.
class BoundExceeded : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An internal invariant failed. Always a library bug or a false theorem.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace wk
