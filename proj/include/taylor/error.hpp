#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taylor {

/// Raised when an operation is applied outside its mathematical domain
/// (division by zero, inverse of zero, transcendental over exact rationals,
/// index or order out of range).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by the expression parser. Carries a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Raised by the weighted relational model when a computation would leave
/// the configured finitary bounds.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace taylor
