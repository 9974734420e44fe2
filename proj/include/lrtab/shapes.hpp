#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "lrtab/errors.hpp"

namespace lrtab {

/// A partition: weakly decreasing non-negative parts, trailing zeros trimmed.
/// Indexing past the stored parts yields 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])) {
        throw PreconditionError("not a partition: parts must be weakly decreasing and non-negative");
      }
    }
  }

  int operator[](int i) const {
    return i >= 0 && static_cast<std::size_t>(i) < parts_.size() ? parts_[i] : 0;
  }

  /// Number of non-zero parts.
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const { return parts_.empty(); }
  const std::vector<int>& parts() const { return parts_; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// A cell (row, col) in matrix orientation, both 0-based.
struct Cell {
  int row = 0;
  int col = 0;

  int diagonal() const { return col - row; }

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Inclusion in the Young lattice: inner[i] <= outer[i] for every row.
inline bool contains(const Partition& outer, const Partition& inner) {
  for (int i = 0; i < inner.length(); ++i) {
    if (inner[i] > outer[i]) return false;
  }
  return true;
}

/// A skew shape outer/inner with inner contained in outer.
class SkewShape {
 public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner = {})
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!lrtab::contains(outer_, inner_)) {
      throw PreconditionError("inner partition is not contained in the outer one");
    }
  }

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }

  /// Number of rows that can hold cells (rows of the outer partition).
  int rows() const { return outer_.length(); }
  int size() const { return outer_.size() - inner_.size(); }
  int row_length(int i) const { return outer_[i] - inner_[i]; }
  bool is_partition_shape() const { return inner_.empty(); }

  bool contains(Cell c) const {
    return c.row >= 0 && c.col >= inner_[c.row] && c.col < outer_[c.row];
  }

  /// Cells strictly below `c` in its column.
  int cells_below(Cell c) const {
    int count = 0;
    for (int i = c.row + 1; i < rows() && contains({i, c.col}); ++i) ++count;
    return count;
  }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// Dominance order on weight vectors: equal totals and prefix sums of `a`
/// bounded by those of `b`. Vectors are padded with zeros.
inline bool dominance_leq(std::span<const int> a, std::span<const int> b) {
  const std::size_t n = std::max(a.size(), b.size());
  long sa = 0;
  long sb = 0;
  for (std::size_t k = 0; k < n; ++k) {
    sa += k < a.size() ? a[k] : 0;
    sb += k < b.size() ? b[k] : 0;
    if (sa > sb) return false;
  }
  return sa == sb;
}

inline bool dominance_leq(const Partition& a, const Partition& b) {
  return dominance_leq(std::span<const int>(a.parts()), std::span<const int>(b.parts()));
}

/// True when the vector is weakly decreasing and non-negative (trailing zeros allowed).
inline bool is_partition(std::span<const int> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || (i > 0 && v[i] > v[i - 1])) return false;
  }
  return true;
}

/// Cells of the diagram, row-major.
inline std::vector<Cell> cells(const SkewShape& shape) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(shape.size()));
  for (int i = 0; i < shape.rows(); ++i) {
    for (int j = shape.inner()[i]; j < shape.outer()[i]; ++j) out.push_back({i, j});
  }
  return out;
}

/// Cells that can be removed from `p` leaving a partition.
inline std::vector<Cell> removable_cells(const Partition& p) {
  std::vector<Cell> out;
  for (int i = 0; i < p.length(); ++i) {
    if (p[i] > p[i + 1]) out.push_back({i, p[i] - 1});
  }
  return out;
}

/// Cells that can be added to `p` giving a partition.
inline std::vector<Cell> addable_cells(const Partition& p) {
  std::vector<Cell> out;
  for (int i = 0; i <= p.length(); ++i) {
    if (i == 0 || p[i - 1] > p[i]) out.push_back({i, p[i]});
  }
  return out;
}

inline bool is_removable(const Partition& p, Cell c) {
  return c.row >= 0 && c.col >= 0 && p[c.row] == c.col + 1 && p[c.row + 1] <= c.col;
}

inline bool is_addable(const Partition& p, Cell c) {
  return c.row >= 0 && p[c.row] == c.col && (c.row == 0 || p[c.row - 1] > c.col);
}

inline Partition remove_cell(const Partition& p, Cell c) {
  if (!is_removable(p, c)) throw PreconditionError("cell is not a removable corner");
  std::vector<int> parts = p.parts();
  --parts[static_cast<std::size_t>(c.row)];
  return Partition(std::move(parts));
}

inline Partition add_cell(const Partition& p, Cell c) {
  if (!is_addable(p, c)) throw PreconditionError("cell is not addable");
  std::vector<int> parts = p.parts();
  if (c.row == p.length()) {
    parts.push_back(1);
  } else {
    ++parts[static_cast<std::size_t>(c.row)];
  }
  return Partition(std::move(parts));
}

/// The cell by which `larger` exceeds `smaller`; they must differ by exactly one cell.
inline Cell difference_cell(const Partition& larger, const Partition& smaller) {
  if (larger.size() != smaller.size() + 1 || !contains(larger, smaller)) {
    throw PreconditionError("partitions do not differ by exactly one cell");
  }
  for (int i = 0; i < larger.length(); ++i) {
    if (larger[i] != smaller[i]) return {i, smaller[i]};
  }
  throw PreconditionError("partitions do not differ by exactly one cell");
}

/// Canonical representative of the product shape: the second factor sits
/// strictly above and to the right of the first.
inline SkewShape product_shape(const Partition& first, const Partition& second) {
  const int shift = first[0];
  std::vector<int> outer;
  std::vector<int> inner;
  for (int part : second.parts()) {
    outer.push_back(part + shift);
    inner.push_back(shift);
  }
  for (int part : first.parts()) outer.push_back(part);
  return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

/// Complement of `p` inside the rows x cols rectangle, rotated by a half turn.
inline Partition diamond(const Partition& p, int rows, int cols) {
  if (rows < 0 || cols < 0 || p.length() > rows || p[0] > cols) {
    throw PreconditionError("partition does not fit the rectangle");
  }
  std::vector<int> parts(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) parts[static_cast<std::size_t>(i)] = cols - p[rows - 1 - i];
  return Partition(std::move(parts));
}

/// No column of the diagram holds two cells.
inline bool is_horizontal_strip(const SkewShape& shape) {
  for (int i = 0; i + 1 < shape.rows(); ++i) {
    if (shape.inner()[i] < shape.outer()[i + 1]) return false;
  }
  return true;
}

/// All partitions of d, in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(int d, int max_part = -1) {
  std::vector<Partition> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int bound) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, bound); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, d, max_part < 0 ? d : max_part);
  return out;
}

inline std::string to_string(const Partition& p) {
  std::string s = "[";
  for (int i = 0; i < p.length(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

inline std::string to_string(const SkewShape& shape) {
  return to_string(shape.outer()) + "/" + to_string(shape.inner());
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const SkewShape& s) { return os << to_string(s); }
inline std::ostream& operator<<(std::ostream& os, const Cell& c) {
  return os << '(' << c.row << ',' << c.col << ')';
}

}  // namespace lrtab
