#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lrtab/errors.hpp"
#include "lrtab/shapes.hpp"
#include "lrtab/tableaux.hpp"

namespace lrtab {

namespace detail {

// Dense working copy of a tableau. Cells outside the tableau hold kNone; the
// grid has one spare row and column so outward slides can open a new cell.
class SlideGrid {
 public:
  static constexpr int kNone = -1;

  explicit SlideGrid(const SkewTableau& t)
      : rows_(t.shape().rows() + 1),
        cols_(t.shape().outer()[0] + 1),
        values_(static_cast<std::size_t>(rows_ * cols_), kNone) {
    for (Cell c : cells(t.shape())) set(c, t.at(c));
  }

  int get(Cell c) const {
    if (c.row < 0 || c.col < 0 || c.row >= rows_ || c.col >= cols_) return kNone;
    return values_[static_cast<std::size_t>(c.row * cols_ + c.col)];
  }
  void set(Cell c, int v) { values_[static_cast<std::size_t>(c.row * cols_ + c.col)] = v; }

  SkewTableau to_tableau(const SkewShape& shape) const {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
    for (int i = 0; i < shape.rows(); ++i) {
      for (int j = shape.inner()[i]; j < shape.outer()[i]; ++j) rows[static_cast<std::size_t>(i)].push_back(get({i, j}));
    }
    return SkewTableau(shape, std::move(rows), SkewTableau::trusted);
  }

 private:
  int rows_;
  int cols_;
  std::vector<int> values_;
};

struct IgnoreMove {
  void operator()(Cell, Cell) const {}
};

// Moves the hole inward until it has no right or lower neighbour; returns
// the final hole. Equal candidates: the lower entry moves. `on_move(from, to)`
// sees every entry that moves.
template <class OnMove = IgnoreMove>
Cell slide_hole_inward(SlideGrid& g, Cell hole, OnMove on_move = {}) {
  for (;;) {
    const Cell right{hole.row, hole.col + 1};
    const Cell below{hole.row + 1, hole.col};
    const int r = g.get(right);
    const int b = g.get(below);
    Cell from;
    if (r == SlideGrid::kNone && b == SlideGrid::kNone) return hole;
    if (r == SlideGrid::kNone) {
      from = below;
    } else if (b == SlideGrid::kNone) {
      from = right;
    } else {
      from = b <= r ? below : right;
    }
    on_move(from, hole);
    g.set(hole, g.get(from));
    g.set(from, SlideGrid::kNone);
    hole = from;
  }
}

// Mirror image: the hole moves outward, taking the larger of the left and
// upper neighbours. Equal candidates: the upper entry moves.
inline Cell slide_hole_outward(SlideGrid& g, Cell hole) {
  for (;;) {
    const Cell left{hole.row, hole.col - 1};
    const Cell above{hole.row - 1, hole.col};
    const int l = g.get(left);
    const int a = g.get(above);
    Cell from;
    if (l == SlideGrid::kNone && a == SlideGrid::kNone) return hole;
    if (l == SlideGrid::kNone) {
      from = above;
    } else if (a == SlideGrid::kNone) {
      from = left;
    } else {
      from = a >= l ? above : left;
    }
    g.set(hole, g.get(from));
    g.set(from, SlideGrid::kNone);
    hole = from;
  }
}

}  // namespace detail

struct SlideResult {
  SkewTableau tableau;
  Cell vacated;
};

/// Inward jeu de taquin slide into `start`, a removable corner of the inner
/// partition. Returns the slid tableau and the cell vacated at the outer edge.
inline SlideResult inward_slide(const SkewTableau& t, Cell start) {
  const SkewShape& shape = t.shape();
  if (!is_removable(shape.inner(), start)) throw PreconditionError("slide must start at a corner of the inner shape");
  detail::SlideGrid g(t);
  const Cell end = detail::slide_hole_inward(g, start);
  SkewShape next(remove_cell(shape.outer(), end), remove_cell(shape.inner(), start));
  return {g.to_tableau(next), end};
}

/// Outward slide from `start`, a cell addable to the outer partition; the
/// exact inverse of inward_slide.
inline SlideResult outward_slide(const SkewTableau& t, Cell start) {
  const SkewShape& shape = t.shape();
  if (!is_addable(shape.outer(), start)) throw PreconditionError("slide must start at a cell addable to the outer shape");
  detail::SlideGrid g(t);
  const Cell end = detail::slide_hole_outward(g, start);
  SkewShape next(add_cell(shape.outer(), start), add_cell(shape.inner(), end));
  return {g.to_tableau(next), end};
}

struct SlideStep {
  Cell start;
  Cell end;
  SkewShape shape;  // shape after the slide

  friend bool operator==(const SlideStep&, const SlideStep&) = default;
};

struct SlideTrace {
  std::vector<SlideStep> steps;

  friend bool operator==(const SlideTrace&, const SlideTrace&) = default;
};

struct Rectification {
  SkewTableau tableau;
  SlideTrace trace;
};

/// Default corner choice: largest diagonal index, then smallest row.
struct OuterDiagonalFirst {
  Cell operator()(const std::vector<Cell>& corners) const {
    return *std::min_element(corners.begin(), corners.end(), [](Cell a, Cell b) {
      return a.diagonal() != b.diagonal() ? a.diagonal() > b.diagonal() : a.row < b.row;
    });
  }
};

/// Inward slides until the inner shape is empty. `choose` picks the next
/// start cell from the corners of the current inner partition.
template <class CornerPolicy = OuterDiagonalFirst>
Rectification rectify(const SkewTableau& t, CornerPolicy choose = {}) {
  Rectification out{t, {}};
  while (!out.tableau.shape().inner().empty()) {
    const Cell start = choose(removable_cells(out.tableau.shape().inner()));
    auto slid = inward_slide(out.tableau, start);
    out.tableau = std::move(slid.tableau);
    out.trace.steps.push_back({start, slid.vacated, out.tableau.shape()});
  }
  return out;
}

/// Result of switching (S, T) with S inside T: `inner` is T', `outer` is S'.
struct SwitchResult {
  SkewTableau inner;
  SkewTableau outer;
};

/// Tableau switching X(S, T) for S of shape mu/nu and T of shape lambda/mu.
/// The cells of S are taken in reverse standardisation order; each becomes
/// the start of an inward slide of T, and the vacated cell receives its entry.
inline SwitchResult tableau_switch(const SkewTableau& s, const SkewTableau& t) {
  if (!(s.shape().outer() == t.shape().inner())) {
    throw PreconditionError("switch needs the outer shape of the first tableau to equal the inner shape of the second");
  }
  detail::SlideGrid tg(t);
  const Partition& nu = s.shape().inner();
  const Partition& lambda = t.shape().outer();
  std::vector<std::pair<Cell, int>> vacated;
  auto order = standard_order(s);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Cell end = detail::slide_hole_inward(tg, *it);
    vacated.emplace_back(end, s.at(*it));
  }
  // T' occupies a prefix of each row starting at nu[i].
  std::vector<int> kappa(static_cast<std::size_t>(lambda.length()), 0);
  for (int i = 0; i < lambda.length(); ++i) {
    int j = nu[i];
    while (j < lambda[i] && tg.get({i, j}) != detail::SlideGrid::kNone) ++j;
    kappa[static_cast<std::size_t>(i)] = j;
  }
  SkewShape inner_shape(Partition(kappa), nu);
  SkewTableau t_prime = tg.to_tableau(inner_shape);
  SkewShape outer_shape(lambda, Partition(kappa));
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(outer_shape.rows()));
  for (int i = 0; i < outer_shape.rows(); ++i) rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(outer_shape.row_length(i)), 0);
  for (const auto& [c, v] : vacated) {
    rows[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col - kappa[static_cast<std::size_t>(c.row)])] = v;
  }
  return {std::move(t_prime), SkewTableau(std::move(outer_shape), std::move(rows))};
}

struct ChainSwitchResult {
  ChainTableau inner;
  ChainTableau outer;
};

inline ChainSwitchResult tableau_switch(const ChainTableau& s, const ChainTableau& t) {
  auto r = tableau_switch(s.labels(), t.labels());
  return {chain_from_labels(r.inner), chain_from_labels(r.outer)};
}

/// Joins two chains end to end.
inline ChainTableau concat(const ChainTableau& t, const ChainTableau& u) {
  if (!(t.outer() == u.inner())) throw PreconditionError("chains do not join: outer of the first differs from inner of the second");
  std::vector<Partition> chain = t.chain();
  chain.insert(chain.end(), u.chain().begin() + 1, u.chain().end());
  return ChainTableau(std::move(chain));
}

/// Dual equivalence test: identical inward slides are applied to both
/// tableaux until they reach partition shape; they are dual equivalent iff
/// their shapes agree at every step.
inline bool dual_equivalent(const SkewTableau& a, const SkewTableau& b) {
  if (!(a.shape() == b.shape())) throw PreconditionError("dual equivalence needs tableaux of equal shape");
  SkewTableau x = a;
  SkewTableau y = b;
  const OuterDiagonalFirst choose;
  while (!x.shape().inner().empty()) {
    const Cell start = choose(removable_cells(x.shape().inner()));
    x = inward_slide(x, start).tableau;
    y = inward_slide(y, start).tableau;
    if (!(x.shape() == y.shape())) return false;
  }
  return true;
}

inline bool dual_equivalent(const ChainTableau& a, const ChainTableau& b) {
  return dual_equivalent(a.labels(), b.labels());
}

/// The tableau of L's shape that rectifies to P and is dual equivalent to L:
/// L is rectified while recording its shapes, then P is slid outward along
/// the same shapes in reverse.
inline SkewTableau phi(const SkewTableau& l, const SkewTableau& p) {
  const auto rect = rectify(l);
  if (!(p.shape() == rect.tableau.shape())) {
    throw PreconditionError("second tableau must have the shape " + to_string(rect.tableau.shape().outer()) +
                            " that the first rectifies to");
  }
  SkewTableau t = p;
  for (auto it = rect.trace.steps.rbegin(); it != rect.trace.steps.rend(); ++it) {
    auto slid = outward_slide(t, it->end);
    if (!(slid.vacated == it->start)) throw std::logic_error("outward slide left the recorded shape sequence");
    t = std::move(slid.tableau);
  }
  return t;
}

/// Applies the rectangle anti-isomorphism to every partition of the chain,
/// reversing the chain.
inline ChainTableau diamond_tableau(const ChainTableau& s, int rows, int cols) {
  std::vector<Partition> chain;
  for (auto it = s.chain().rbegin(); it != s.chain().rend(); ++it) chain.push_back(diamond(*it, rows, cols));
  return ChainTableau(std::move(chain));
}

/// A doubly indexed family of partitions, grid[i][j]. Rows and columns are
/// saturated chains; adjacent off-diagonal entries differ unless the square
/// they span is a domino.
struct SwitchingFamily {
  std::vector<std::vector<Partition>> grid;
};

inline bool is_domino(const Partition& larger, const Partition& smaller) {
  if (larger.size() != smaller.size() + 2 || !contains(larger, smaller)) return false;
  const auto diff = cells(SkewShape(larger, smaller));
  return diff[0].row == diff[1].row || diff[0].col == diff[1].col;
}

inline bool is_valid_switching_family(const SwitchingFamily& f) {
  const auto& g = f.grid;
  if (g.empty() || g[0].empty()) return false;
  const std::size_t rows = g.size();
  const std::size_t cols = g[0].size();
  auto one_step = [](const Partition& big, const Partition& small) {
    return big.size() == small.size() + 1 && contains(big, small);
  };
  for (std::size_t i = 0; i < rows; ++i) {
    if (g[i].size() != cols) return false;
    for (std::size_t j = 0; j < cols; ++j) {
      if (j + 1 < cols && !one_step(g[i][j + 1], g[i][j])) return false;
      if (i + 1 < rows && !one_step(g[i + 1][j], g[i][j])) return false;
      if (i + 1 < rows && j + 1 < cols && !is_domino(g[i + 1][j + 1], g[i][j]) && g[i][j + 1] == g[i + 1][j]) {
        return false;
      }
    }
  }
  return true;
}

/// Builds the switching family whose left column is S and bottom row is T by
/// completing each elementary square with the local rule.
inline SwitchingFamily switching_family(const ChainTableau& s, const ChainTableau& t) {
  if (!(s.outer() == t.inner())) throw PreconditionError("switch needs outer(S) == inner(T)");
  const std::size_t rows = s.chain().size();
  const std::size_t cols = t.chain().size();
  SwitchingFamily f{std::vector<std::vector<Partition>>(rows, std::vector<Partition>(cols))};
  for (std::size_t i = 0; i < rows; ++i) f.grid[i][0] = s.chain()[i];
  for (std::size_t j = 0; j < cols; ++j) f.grid[rows - 1][j] = t.chain()[j];
  for (std::size_t i = rows - 1; i-- > 0;) {
    for (std::size_t j = 0; j + 1 < cols; ++j) {
      const Partition& low = f.grid[i][j];
      const Partition& mid = f.grid[i + 1][j];
      const Partition& high = f.grid[i + 1][j + 1];
      if (is_domino(high, low)) {
        f.grid[i][j + 1] = mid;
        continue;
      }
      // The two cells of high/low are incomparable; take the other route.
      const Cell via_mid = difference_cell(mid, low);
      for (Cell c : cells(SkewShape(high, low))) {
        if (!(c == via_mid)) f.grid[i][j + 1] = add_cell(low, c);
      }
    }
  }
  return f;
}

inline ChainSwitchResult switch_via_family(const ChainTableau& s, const ChainTableau& t) {
  const auto f = switching_family(s, t);
  std::vector<Partition> last_col;
  for (const auto& row : f.grid) last_col.push_back(row.back());
  return {ChainTableau(f.grid.front()), ChainTableau(std::move(last_col))};
}

}  // namespace lrtab
