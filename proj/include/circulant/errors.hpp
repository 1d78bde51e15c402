#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace circulant {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed argument that does not fit one of the more specific errors.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An undirected connection set contains s but not n - s.
class SymmetryViolation : public Error {
 public:
  explicit SymmetryViolation(std::int64_t element)
      : Error("connection set is not symmetric: " + std::to_string(element) +
              " present but its negative is missing"),
        element_(element) {}
  std::int64_t element() const noexcept { return element_; }

 private:
  std::int64_t element_;
};

/// A connection-set entry is 0 or outside [1, n-1].
class RangeViolation : public Error {
 public:
  RangeViolation(std::int64_t element, std::int64_t n)
      : Error("connection set entry " + std::to_string(element) +
              " outside [1, " + std::to_string(n - 1) + "]"),
        element_(element) {}
  std::int64_t element() const noexcept { return element_; }

 private:
  std::int64_t element_;
};

/// A residue that must be a unit is not coprime to the modulus.
class NotAUnit : public Error {
 public:
  NotAUnit(std::int64_t element, std::int64_t n)
      : Error(std::to_string(element) + " is not a unit modulo " +
              std::to_string(n)),
        element_(element) {}
  std::int64_t element() const noexcept { return element_; }

 private:
  std::int64_t element_;
};

/// Malformed text input; column is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error("column " + std::to_string(column) + ": " + what),
        column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

/// A search or enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// No solver covers this graph order within the configured budget.
class UnsupportedOrder : public Error {
 public:
  explicit UnsupportedOrder(std::int64_t n)
      : Error("unsupported graph order " + std::to_string(n)), n_(n) {}
  std::int64_t order() const noexcept { return n_; }

 private:
  std::int64_t n_;
};

/// A classification theorem's hypothesis holds but no listed family matches.
class ClassificationViolation : public Error {
 public:
  using Error::Error;
};

/// Neither branch of the prime-power dichotomy holds.
class DichotomyViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace circulant
