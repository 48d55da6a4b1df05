#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lefschetz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments of an operation was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The input ideal does not define an artinian quotient.
class NotArtinian : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A Hilbert sequence was rejected by Macaulay's admissibility test.
class InadmissibleSequence : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A search cap was reached before the answer was determined.
class Indeterminate : public Error {
 public:
  using Error::Error;
};

/// A combinatorial or matrix budget was exhausted.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed ideal, polynomial or sequence text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lefschetz
