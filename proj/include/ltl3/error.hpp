#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ltl3 {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. Line and column are 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// A formula or a state mentions a proposition outside the governing alphabet,
/// or two objects built over different alphabets were combined.
class AlphabetError : public Error {
public:
  using Error::Error;
};

/// A configurable resource ceiling (automaton nodes, monitor states,
/// formula size) was hit.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// An argument violated an operation's documented precondition.
class DomainError : public Error {
public:
  using Error::Error;
};

} // namespace ltl3
