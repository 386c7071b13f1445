#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ndiag {

/// Bad user input: malformed text, dimension mismatch, violated precondition.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in polynomial or map text. `position()` is a 0-based byte offset.
class ParseError : public InputError {
public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A verified claim failed on a concrete instance. `dump()` carries the
/// counterexample (usually a diagram in the JSON dump format).
class TheoremContradiction : public std::runtime_error {
public:
  TheoremContradiction(const std::string& what, std::string dump)
      : std::runtime_error(what), dump_(std::move(dump)) {}

  const std::string& dump() const noexcept { return dump_; }

private:
  std::string dump_;
};

/// An exhaustive search was refused because it exceeds the assignment budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace ndiag
