#pragma once

#include <stdexcept>
#include <string>

namespace wbar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Composable-dimension or index precondition violated.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation would need a level above the truncation of a simplicial group.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Table data failed an algebraic law (group axioms, homomorphism law,
/// simplicial identities).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Enumeration would exceed the configured instance budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace wbar
