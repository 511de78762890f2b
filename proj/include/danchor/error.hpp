#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace danchor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Structurally invalid data (non-positive weight, empty edge set, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Operation called outside its domain (empty subset, edgeless graph, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Exact arithmetic left the representable 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Brute-force enumeration refused an input above its budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed; always a bug, never a caller error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace danchor
