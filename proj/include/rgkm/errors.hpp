#pragma once

#include <stdexcept>
#include <string>

namespace rgkm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConductorMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class SingularGenerator : public Error {
 public:
  using Error::Error;
};

class NotPolynomialInvariantRing : public Error {
 public:
  using Error::Error;
};

class DegreeBoundTooSmall : public Error {
 public:
  using Error::Error;
};

class HistogramMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A result the library guarantees mathematically failed to hold.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// Raised by the text parsers; carries a 1-based line/column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Raised when an input file is well-formed JSON but violates the schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace rgkm
