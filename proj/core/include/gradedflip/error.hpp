#pragma once

#include <stdexcept>
#include <string>

namespace gradedflip {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed data: mismatched lengths, wrong field, broken invariants.
class structural_error : public error {
public:
  explicit structural_error(const std::string& what) : error(what) {}
};

/// Input text rejected by the ring-spec parser. Carries line/column.
class parse_error : public error {
public:
  parse_error(const std::string& what, int line, int column)
      : error("line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// Operation outside the supported fragment (e.g. exact cohomology of a
/// quotient ring). A typed refusal, never an approximation.
class unsupported_error : public error {
public:
  explicit unsupported_error(const std::string& what) : error(what) {}
};

/// Configurable step budget exceeded (Groebner engine).
class budget_error : public error {
public:
  explicit budget_error(const std::string& what) : error(what) {}
};

}  // namespace gradedflip
