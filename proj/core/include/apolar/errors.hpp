#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apolar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings with different variable counts or ring tags.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A degree precondition failed (inhomogeneous input, wrong degree, ...).
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// An integer argument is outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Division by zero, singular change of variables, non-split form, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace apolar
