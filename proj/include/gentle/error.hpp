#pragma once

#include <stdexcept>
#include <string>

namespace gentle {

// Malformed input text (algebra files, string or module expressions).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line = 0, int column = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " +
                                          std::to_string(column) + ": " + msg
                                    : msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Input is well formed but violates a mathematical requirement.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation was called outside its precondition (e.g. Ext dimension != 1).
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& msg, int measured = -1)
      : std::runtime_error(msg), measured_(measured) {}
  int measured() const { return measured_; }

 private:
  int measured_;
};

// Case deliberately not implemented (band x band extensions).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gentle
