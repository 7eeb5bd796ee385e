#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lzero {

/// Malformed diagram text. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed text that does not describe a consistent diagram, or an
/// operation asked for something the diagram does not contain.
class DiagramError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The local pattern demanded by a move is absent.
class MoveError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An invariant was requested outside the regime where it is defined
/// (nonzero linking between the components involved).
class InvariantUndefined : public std::runtime_error {
public:
  InvariantUndefined(int i, int j, long long linking)
      : std::runtime_error("lk(K_" + std::to_string(i) + ",K_" + std::to_string(j) + ")=" + std::to_string(linking) +
                           " is nonzero"),
        i_(i), j_(j), linking_(linking) {}

  int first() const noexcept { return i_; }
  int second() const noexcept { return j_; }
  long long linking() const noexcept { return linking_; }

private:
  int i_;
  int j_;
  long long linking_;
};

/// A class tuple with wrong lengths or entries, or two classes over
/// different component counts.
class ClassError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Signals a broken internal guarantee, never bad user input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace lzero
