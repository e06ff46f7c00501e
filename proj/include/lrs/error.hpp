#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrs {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical precondition was violated (division by zero, bad arity...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Values from two different fields were combined without an embedding.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

/// A coefficient that was required to lie in a subfield does not.
/// Raised only on internal inconsistency or misuse of the spectrum API.
class DescentError : public Error {
 public:
  using Error::Error;
};

/// A configured work limit (tuple cap, oracle degree budget) was exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Over Q the formula path needs every root to be rational.
class IrrationalRoots : public Error {
 public:
  using Error::Error;
};

/// Malformed field or polynomial text; `position` is a 0-based offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string input, std::size_t position)
      : Error(message), input_(std::move(input)), position_(position) {}

  const std::string& input() const { return input_; }
  std::size_t position() const { return position_; }

  /// The input followed by a caret line pointing at the offending column.
  std::string caret() const { return input_ + "\n" + std::string(position_, ' ') + "^"; }

 private:
  std::string input_;
  std::size_t position_;
};

}  // namespace lrs
