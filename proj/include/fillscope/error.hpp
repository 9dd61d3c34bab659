#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fillscope {

enum class ErrorKind {
  dimension_out_of_range,
  dimension_mismatch,
  unknown_cell,
  unknown_generator,
  invariant_violation,
  inconsistent_assignment,
  disconnected,
  empty_range,
  parse_error,
  invalid_argument,
};

const char* to_string(ErrorKind kind) noexcept;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax errors carry the 1-based line and column of the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(ErrorKind::parse_error,
              what + " (line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fillscope
