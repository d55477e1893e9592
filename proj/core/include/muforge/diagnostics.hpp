#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace muforge {

// Raised on malformed concrete syntax. offset/line/col point at the first
// offending character (0-based offset, 1-based line/col).
class ParseError : public std::runtime_error {
public:
  ParseError(std::string msg, std::size_t offset, std::size_t line, std::size_t col)
      : std::runtime_error(std::move(msg)), offset(offset), line(line), col(col) {}

  std::size_t offset;
  std::size_t line;
  std::size_t col;
};

// Raised when a structurally well-formed object violates a semantic
// precondition (unguarded variable, free variable, bad back edge, ...).
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

// Raised when an exploration exceeds its configured node budget.
class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(std::string msg) : std::runtime_error(std::move(msg)) {}
};

} // namespace muforge
