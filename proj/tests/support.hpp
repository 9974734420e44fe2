#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "lrtab/lrtab.hpp"

namespace lrtab::testing {

inline SkewTableau tab(std::string_view text) { return parse_tableau(text); }
inline Word word(std::string_view text) { return parse_word(text); }

// Tableaux and words that appear in the worked examples.
namespace golden {

inline constexpr std::string_view kT = "3:0,1|1:0,1,1,3|0:0,2,2,3|0:1,4,4,5|0:3,5";
inline constexpr std::string_view kTbar = "6:0,1,2|4:0,1,1,3|4:2,2|2:1,2,4|1:3,3|0:3,4";
inline const Partition kKappa{6, 4, 4, 2, 1};
inline constexpr std::string_view kL = "4:0,0|2:0,1,1|1:0,1,2,2|0:0,1,3|0:2,4";
inline constexpr std::string_view kLbar = "0:0,0,1,2,3|0:1,1,2,3|0:2,2,4|0:3|0:4";
inline constexpr std::string_view kLstar = "5:0|4:0|3:0,1|1:0,2|1:1";
inline constexpr std::string_view kBig = "5:0,0,0,0|5:1,1|5:2|0:0,0,1,2,3|0:1,1,2,3|0:2,2,4|0:3|0:4";
inline constexpr std::string_view kCopex = "4 0 1 5 2 1 3 5 0 1 4 2 0 0 1 2 3 3 4";
inline constexpr std::string_view kCopexNormal = "0 0 1 2 1 0 3 4 0 1 2 1 0 0 1 2 3 3 4";

// The 5x5 grid of the commutation figure: grid[row][col], row 0 on top
// (fully raised), col 0 on the left (rectified). Each column to the left is
// one inward slide; each row upwards is a batch of raising operations.
inline const std::vector<std::vector<std::string_view>> kGrid = {
    {"0:0,0,0,0,0|0:1,1,1,1,1|0:2,2,2,2|0:3|0:4", "1:0,0,0,0|0:0,1,1,1,1|0:1,2,2,2|0:2,3|0:4",
     "1:0,0,0,0|1:1,1,1,1|0:0,2,2,2|0:1,3|0:2,4", "2:0,0,0|1:0,1,1,1|0:0,1,2,2|0:1,2,3|0:2,4",
     "3:0,0|1:0,0,1,1|0:0,1,1,2|0:1,2,2,3|0:2,4"},
    {"0:0,0,0,0,0|0:1,1,1,1,1|0:2,2,2,5|0:3|0:5", "1:0,0,0,0|0:0,1,1,1,1|0:1,2,2,5|0:2,3|0:5",
     "1:0,0,0,0|1:1,1,1,1|0:0,2,2,5|0:1,3|0:2,5", "2:0,0,0|1:0,1,1,1|0:0,1,2,5|0:1,2,3|0:2,5",
     "3:0,0|1:0,0,1,1|0:0,1,1,2|0:1,2,3,5|0:2,5"},
    {"0:0,0,0,0,0|0:1,1,1,1,1|0:2,4,4,5|0:3|0:5", "1:0,0,0,0|0:0,1,1,1,1|0:1,2,4,5|0:3,4|0:5",
     "1:0,0,0,0|1:1,1,1,1|0:0,2,4,5|0:1,4|0:3,5", "2:0,0,0|1:0,1,1,1|0:0,1,2,5|0:1,4,4|0:3,5",
     "3:0,0|1:0,0,1,1|0:0,1,1,2|0:1,4,4,5|0:3,5"},
    {"0:0,0,0,0,0|0:1,1,1,3,3|0:2,4,4,5|0:3|0:5", "1:0,0,0,0|0:0,1,1,3,3|0:1,2,4,5|0:3,4|0:5",
     "1:0,0,0,0|1:1,1,3,3|0:0,2,4,5|0:1,4|0:3,5", "2:0,0,0|1:0,1,3,3|0:0,1,2,5|0:1,4,4|0:3,5",
     "3:0,0|1:0,0,1,3|0:0,1,2,3|0:1,4,4,5|0:3,5"},
    {"0:0,0,0,1,1|0:1,1,2,3,3|0:2,4,4,5|0:3|0:5", "1:0,0,1,1|0:0,1,2,3,3|0:1,2,4,5|0:3,4|0:5",
     "1:0,0,1,1|1:1,2,3,3|0:0,2,4,5|0:1,4|0:3,5", "2:0,1,1|1:0,1,3,3|0:0,2,2,5|0:1,4,4|0:3,5",
     "3:0,1|1:0,1,1,3|0:0,2,2,3|0:1,4,4,5|0:3,5"},
};

// Raising indices applied between consecutive grid rows, bottom to top.
inline const std::vector<std::vector<int>> kGridRaises = {{0, 0, 1}, {2, 1, 2, 1}, {3, 2, 3, 2}, {4, 4, 3, 2}};

// Start cells of the inward slides from column c+1 to column c.
inline const std::vector<Cell> kGridSlides = {{0, 0}, {1, 0}, {0, 1}, {0, 2}};

}  // namespace golden

// Random generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Partition partition(int size, int max_rows = 100) {
    std::vector<int> parts;
    int remaining = size;
    int bound = size;
    while (remaining > 0 && static_cast<int>(parts.size()) < max_rows) {
      const int p = uniform(1, std::min(bound, remaining));
      parts.push_back(p);
      remaining -= p;
      bound = p;
    }
    return Partition(parts);
  }

  // A skew shape with the given number of cells and at most max_rows rows.
  SkewShape skew_shape(int cells, int max_rows) {
    for (;;) {
      const int inner_size = uniform(0, 5);
      const Partition outer = partition(cells + inner_size, max_rows);
      if (outer.size() != cells + inner_size) continue;
      // Remove inner_size cells as corners from the top-left, by growing an inner partition.
      Partition inner;
      bool ok = true;
      for (int k = 0; k < inner_size && ok; ++k) {
        std::vector<Cell> options;
        for (Cell c : addable_cells(inner)) {
          if (c.col < outer[c.row]) options.push_back(c);
        }
        if (options.empty()) ok = false;
        else inner = add_cell(inner, options[static_cast<std::size_t>(uniform(0, static_cast<int>(options.size()) - 1))]);
      }
      if (ok) return SkewShape(outer, inner);
    }
  }

  // A uniformly chosen entry at each cell, filling in Semitic order within
  // the bounds that keep a completion possible.
  SkewTableau tableau(const SkewShape& shape, int n) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
    for (int i = 0; i < shape.rows(); ++i) rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape.row_length(i)), 0);
    auto at = [&](int i, int j) -> int& { return rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - shape.inner()[i])]; };
    for (Cell c : reading_cells(shape, ReadingOrder::Semitic)) {
      int lo = c.row > 0 && shape.contains({c.row - 1, c.col}) ? at(c.row - 1, c.col) + 1 : 0;
      int hi = n - 1 - shape.cells_below(c);
      if (shape.contains({c.row, c.col + 1})) hi = std::min(hi, at(c.row, c.col + 1));
      at(c.row, c.col) = uniform(lo, hi);
    }
    return SkewTableau(shape, std::move(rows));
  }

  // A random tableau with between 1 and max_cells cells, letters below n.
  SkewTableau tableau(int max_cells, int n) {
    const int cells = uniform(1, max_cells);
    return tableau(skew_shape(cells, n), n);
  }

  ChainTableau chain(const SkewShape& shape) {
    std::vector<Partition> c{shape.inner()};
    while (c.back().size() < shape.outer().size()) {
      std::vector<Cell> options;
      for (Cell cell : addable_cells(c.back())) {
        if (cell.col < shape.outer()[cell.row]) options.push_back(cell);
      }
      c.push_back(add_cell(c.back(), options[static_cast<std::size_t>(uniform(0, static_cast<int>(options.size()) - 1))]));
    }
    return ChainTableau(std::move(c));
  }

  // A random corner, for order-independence tests.
  Cell pick(const std::vector<Cell>& corners) {
    return corners[static_cast<std::size_t>(uniform(0, static_cast<int>(corners.size()) - 1))];
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace lrtab::testing
