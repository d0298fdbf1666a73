#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cork {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }
  std::size_t line_;
  std::size_t column_;
};

/// A front that is not in generic position (vertical segment, triple point, ...).
class GenericityError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A formal rule whose side conditions do not hold for the given data.
class RuleNotApplicable : public Error {
 public:
  RuleNotApplicable(std::string rule, std::string condition)
      : Error(rule + " not applicable (" + condition + " fails)"),
        rule_(std::move(rule)),
        condition_(std::move(condition)) {}

  const std::string& rule() const noexcept { return rule_; }
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string rule_;
  std::string condition_;
};

}  // namespace cork
