#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrtab {

// Malformed text input. `position` is a 0-based offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// An operation was called outside its domain (shape mismatch, invalid corner, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A precondition failure attributable to one particular cell, e.g. a
// semistandardness violation or the first cell where a dominance test fails.
class CellError : public PreconditionError {
 public:
  CellError(const std::string& what, int row, int col)
      : PreconditionError(what + " at cell (" + std::to_string(row) + "," +
                          std::to_string(col) + ")"),
        row_(row),
        col_(col) {}

  int row() const noexcept { return row_; }
  int col() const noexcept { return col_; }

 private:
  int row_;
  int col_;
};

// A configured size guard was exceeded (vertex cap, oracle term estimate).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lrtab
