#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prop {

/// Malformed or out-of-contract input: bad presentation text, mismatched
/// parameters, indices out of range.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Presentation DSL syntax error, carrying a 1-based source position.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A computation would exceed a size limit. Raised before any large
/// allocation; callers may retry with the override flag.
class GuardrailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested answer lies beyond the truncation degree of the computation.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace prop
