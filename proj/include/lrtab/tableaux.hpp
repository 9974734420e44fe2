#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lrtab/errors.hpp"
#include "lrtab/shapes.hpp"

namespace lrtab {

/// Letter counts: component k is the number of occurrences of letter k.
/// Values produced by this library carry no trailing zeros.
using Weight = std::vector<int>;

/// A word over the alphabet {0, 1, ...}.
using Word = std::vector<int>;

inline Weight trimmed(Weight w) {
  while (!w.empty() && w.back() == 0) w.pop_back();
  return w;
}

inline Weight word_weight(const Word& w) {
  Weight out;
  for (int letter : w) {
    if (letter >= static_cast<int>(out.size())) out.resize(static_cast<std::size_t>(letter) + 1, 0);
    ++out[static_cast<std::size_t>(letter)];
  }
  return out;
}

/// A skew semistandard tableau: rows weakly increase, columns strictly increase.
///
/// Entries are stored per row for the columns inner[i] .. outer[i]-1, so the
/// row vectors line up with the text form `o:e1,e2,...`.
class SkewTableau {
 public:
  struct Trusted {};
  static constexpr Trusted trusted{};

  SkewTableau() = default;

  SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), rows_(std::move(rows)) {
    validate();
  }

  // Skips validation; for producers that maintain the invariants themselves.
  SkewTableau(SkewShape shape, std::vector<std::vector<int>> rows, Trusted)
      : shape_(std::move(shape)), rows_(std::move(rows)) {}

  const SkewShape& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  bool empty() const { return shape_.size() == 0; }

  int at(int i, int j) const {
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - shape_.inner()[i])];
  }
  int at(Cell c) const { return at(c.row, c.col); }
  bool contains(Cell c) const { return shape_.contains(c); }

  /// Copy with the entry of one cell replaced; validates semistandardness.
  SkewTableau with_entry(Cell c, int value) const {
    auto rows = rows_;
    rows[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col - shape_.inner()[c.row])] = value;
    return SkewTableau(shape_, std::move(rows));
  }

  int max_entry() const {
    int m = -1;
    for (const auto& row : rows_) {
      for (int e : row) m = std::max(m, e);
    }
    return m;
  }

  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;

 private:
  void validate() const {
    if (static_cast<int>(rows_.size()) != shape_.rows()) {
      throw PreconditionError("row count does not match the shape");
    }
    for (int i = 0; i < shape_.rows(); ++i) {
      if (static_cast<int>(rows_[static_cast<std::size_t>(i)].size()) != shape_.row_length(i)) {
        throw PreconditionError("row " + std::to_string(i) + " length does not match the shape");
      }
    }
    for (int i = 0; i < shape_.rows(); ++i) {
      for (int j = shape_.inner()[i]; j < shape_.outer()[i]; ++j) {
        const int e = at(i, j);
        if (e < 0) throw CellError("negative entry", i, j);
        if (shape_.contains({i, j + 1}) && at(i, j + 1) < e) throw CellError("row decreases", i, j + 1);
        if (shape_.contains({i + 1, j}) && at(i + 1, j) <= e) throw CellError("column does not strictly increase", i + 1, j);
      }
    }
  }

  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// A skew standard tableau, held as a saturated chain in the Young lattice.
class ChainTableau {
 public:
  ChainTableau() : chain_{Partition{}} {}

  explicit ChainTableau(std::vector<Partition> chain) : chain_(std::move(chain)) {
    if (chain_.empty()) throw PreconditionError("a chain needs at least one partition");
    for (std::size_t k = 1; k < chain_.size(); ++k) {
      difference_cell(chain_[k], chain_[k - 1]);  // throws unless exactly one cell is added
    }
  }

  /// The chain of length zero sitting at `p`.
  static ChainTableau at(Partition p) { return ChainTableau(std::vector<Partition>{std::move(p)}); }

  const std::vector<Partition>& chain() const { return chain_; }
  const Partition& inner() const { return chain_.front(); }
  const Partition& outer() const { return chain_.back(); }
  SkewShape shape() const { return SkewShape(outer(), inner()); }
  int size() const { return static_cast<int>(chain_.size()) - 1; }

  /// Cell added at step k (0-based).
  Cell added(int k) const {
    return difference_cell(chain_[static_cast<std::size_t>(k) + 1], chain_[static_cast<std::size_t>(k)]);
  }

  /// The label tableau: the cell added at step k holds k.
  SkewTableau labels() const {
    const SkewShape s = shape();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(s.rows()));
    for (int i = 0; i < s.rows(); ++i) rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(s.row_length(i)), 0);
    for (int k = 0; k < size(); ++k) {
      const Cell c = added(k);
      rows[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col - s.inner()[c.row])] = k;
    }
    return SkewTableau(s, std::move(rows), SkewTableau::trusted);
  }

  friend bool operator==(const ChainTableau&, const ChainTableau&) = default;

 private:
  std::vector<Partition> chain_;
};

enum class ReadingOrder { Semitic, Kanji };

/// Semitic: rows top to bottom, each right to left. Kanji: columns right to
/// left, each top to bottom. Both are valid reading orders.
inline std::vector<Cell> reading_cells(const SkewShape& shape, ReadingOrder order) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(shape.size()));
  if (order == ReadingOrder::Semitic) {
    for (int i = 0; i < shape.rows(); ++i) {
      for (int j = shape.outer()[i] - 1; j >= shape.inner()[i]; --j) out.push_back({i, j});
    }
  } else {
    for (int j = shape.outer()[0] - 1; j >= 0; --j) {
      for (int i = 0; i < shape.rows(); ++i) {
        if (shape.contains({i, j})) out.push_back({i, j});
      }
    }
  }
  return out;
}

inline Word reading_word(const SkewTableau& t, ReadingOrder order = ReadingOrder::Semitic) {
  Word w;
  w.reserve(static_cast<std::size_t>(t.size()));
  for (Cell c : reading_cells(t.shape(), order)) w.push_back(t.at(c));
  return w;
}

inline Weight weight(const SkewTableau& t) {
  Weight out;
  for (const auto& row : t.rows()) {
    for (int e : row) {
      if (e >= static_cast<int>(out.size())) out.resize(static_cast<std::size_t>(e) + 1, 0);
      ++out[static_cast<std::size_t>(e)];
    }
  }
  return out;
}

/// Builds a tableau of the given shape from entries listed in reading order.
inline SkewTableau fill_from_word(const SkewShape& shape, const Word& w, ReadingOrder order = ReadingOrder::Semitic) {
  const auto order_cells = reading_cells(shape, order);
  if (order_cells.size() != w.size()) throw PreconditionError("word length does not match the shape");
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  for (int i = 0; i < shape.rows(); ++i) rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape.row_length(i)), 0);
  for (std::size_t p = 0; p < w.size(); ++p) {
    const Cell c = order_cells[p];
    rows[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col - shape.inner()[c.row])] = w[p];
  }
  return SkewTableau(shape, std::move(rows));
}

/// Cells ordered by entry, ties broken by increasing column.
inline std::vector<Cell> standard_order(const SkewTableau& t) {
  std::vector<Cell> cs = cells(t.shape());
  std::sort(cs.begin(), cs.end(), [&](Cell a, Cell b) {
    const int ea = t.at(a);
    const int eb = t.at(b);
    return ea != eb ? ea < eb : a.col < b.col;
  });
  return cs;
}

inline ChainTableau standardise(const SkewTableau& t) {
  std::vector<Partition> chain{t.shape().inner()};
  for (Cell c : standard_order(t)) chain.push_back(add_cell(chain.back(), c));
  return ChainTableau(std::move(chain));
}

/// The unique tableau with standardisation `s` and weight `alpha`.
inline SkewTableau destandardise(const ChainTableau& s, const Weight& alpha) {
  int total = 0;
  for (int a : alpha) {
    if (a < 0) throw PreconditionError("negative weight component");
    total += a;
  }
  if (total != s.size()) throw PreconditionError("weight size does not match the chain size");
  const SkewShape shape = s.shape();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  for (int i = 0; i < shape.rows(); ++i) rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape.row_length(i)), 0);
  int step = 0;
  for (std::size_t letter = 0; letter < alpha.size(); ++letter) {
    for (int r = 0; r < alpha[letter]; ++r, ++step) {
      const Cell c = s.added(step);
      rows[static_cast<std::size_t>(c.row)][static_cast<std::size_t>(c.col - shape.inner()[c.row])] = static_cast<int>(letter);
    }
  }
  SkewTableau t(shape, std::move(rows));
  if (!(standardise(t) == s)) throw PreconditionError("chain is not compatible with the weight");
  return t;
}

/// A chain from a tableau with pairwise distinct entries (label order).
inline ChainTableau chain_from_labels(const SkewTableau& t) {
  const auto order = standard_order(t);
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (t.at(order[k]) == t.at(order[k - 1])) throw PreconditionError("labels are not distinct");
  }
  return standardise(t);
}

/// Row i filled with the letter i.
inline SkewTableau canonical(const Partition& p) {
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < p.length(); ++i) rows.emplace_back(static_cast<std::size_t>(p[i]), i);
  return SkewTableau(SkewShape(p), std::move(rows), SkewTableau::trusted);
}

/// First cell at which the dominance test for `kappa` fails: starting from
/// kappa, add each entry in Semitic order and require a partition throughout.
inline std::optional<Cell> dominance_failure(const SkewTableau& t, const Partition& kappa) {
  std::vector<int> alpha(kappa.parts());
  alpha.resize(std::max<std::size_t>(alpha.size(), static_cast<std::size_t>(t.max_entry() + 1)), 0);
  for (Cell c : reading_cells(t.shape(), ReadingOrder::Semitic)) {
    const auto e = static_cast<std::size_t>(t.at(c));
    ++alpha[e];
    if (e > 0 && alpha[e] > alpha[e - 1]) return c;
  }
  return std::nullopt;
}

inline bool is_dominant_for(const SkewTableau& t, const Partition& kappa) {
  return !dominance_failure(t, kappa).has_value();
}

inline bool is_lr_tableau(const SkewTableau& t) { return is_dominant_for(t, Partition{}); }

/// Row counts: result[k][l] is the number of entries l in row k.
inline std::vector<std::vector<int>> row_counts(const SkewTableau& t) {
  const int letters = t.max_entry() + 1;
  std::vector<std::vector<int>> counts(t.rows().size(), std::vector<int>(static_cast<std::size_t>(std::max(letters, 0)), 0));
  for (std::size_t k = 0; k < t.rows().size(); ++k) {
    for (int e : t.rows()[k]) ++counts[k][static_cast<std::size_t>(e)];
  }
  return counts;
}

/// The companion tableau of shape (kappa + wt T)/kappa: row l holds, for each
/// k, as many letters k as row k of T holds letters l.
inline SkewTableau companion(const SkewTableau& t, const Partition& kappa) {
  if (auto bad = dominance_failure(t, kappa)) {
    throw CellError("tableau is not dominant over " + to_string(kappa), bad->row, bad->col);
  }
  const Weight wt = weight(t);
  std::vector<int> outer(kappa.parts());
  outer.resize(std::max(outer.size(), wt.size()), 0);
  for (std::size_t l = 0; l < wt.size(); ++l) outer[l] += wt[l];
  const auto counts = row_counts(t);
  std::vector<std::vector<int>> rows(outer.size());
  for (std::size_t l = 0; l < wt.size(); ++l) {
    for (std::size_t k = 0; k < counts.size(); ++k) {
      rows[l].insert(rows[l].end(), static_cast<std::size_t>(counts[k][l]), static_cast<int>(k));
    }
  }
  Partition nu(outer);
  rows.resize(static_cast<std::size_t>(nu.length()));
  return SkewTableau(SkewShape(std::move(nu), kappa), std::move(rows));
}

/// Bender-Knuth involution exchanging the roles of k and k+1.
inline SkewTableau bender_knuth(const SkewTableau& t, int k) {
  auto rows = t.rows();
  const SkewShape& shape = t.shape();
  for (int i = 0; i < shape.rows(); ++i) {
    int first = -1;
    int r = 0;
    int s = 0;
    for (int j = shape.inner()[i]; j < shape.outer()[i]; ++j) {
      const int e = t.at(i, j);
      bool free = false;
      if (e == k) free = !(shape.contains({i + 1, j}) && t.at(i + 1, j) == k + 1);
      if (e == k + 1) free = !(shape.contains({i - 1, j}) && t.at(i - 1, j) == k);
      if (!free) continue;
      if (first < 0) first = j;
      (e == k ? r : s) += 1;
    }
    auto& row = rows[static_cast<std::size_t>(i)];
    for (int c = 0; c < r + s; ++c) {
      row[static_cast<std::size_t>(first + c - shape.inner()[i])] = c < s ? k : k + 1;
    }
  }
  return SkewTableau(shape, std::move(rows));
}

namespace detail {

// Cells in Semitic order together with the neighbour data the searches need.
struct SearchCell {
  Cell cell;
  bool has_right;
  bool has_above;
  int below;
};

inline std::vector<SearchCell> search_cells(const SkewShape& shape) {
  std::vector<SearchCell> out;
  for (Cell c : reading_cells(shape, ReadingOrder::Semitic)) {
    out.push_back({c, shape.contains({c.row, c.col + 1}),
                   c.row > 0 && shape.contains({c.row - 1, c.col}), shape.cells_below(c)});
  }
  return out;
}

inline std::vector<std::vector<int>> blank_rows(const SkewShape& shape) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(shape.rows()));
  for (int i = 0; i < shape.rows(); ++i) rows[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape.row_length(i)), 0);
  return rows;
}

}  // namespace detail

/// Visits every tableau of the shape with entries below n, in lexicographic
/// order of Semitic reading words.
template <class Visit>
void for_each_tableau(const SkewShape& shape, int n, Visit&& visit) {
  if (n < 0) throw PreconditionError("letter bound must be non-negative");
  const auto order = detail::search_cells(shape);
  auto rows = detail::blank_rows(shape);
  const Partition& inner = shape.inner();
  auto entry = [&](int i, int j) -> int& {
    return rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - inner[i])];
  };
  auto rec = [&](auto&& self, std::size_t p) -> void {
    if (p == order.size()) {
      visit(SkewTableau(shape, rows, SkewTableau::trusted));
      return;
    }
    const auto& sc = order[p];
    const Cell c = sc.cell;
    int lo = sc.has_above ? entry(c.row - 1, c.col) + 1 : 0;
    int hi = n - 1 - sc.below;
    if (sc.has_right) hi = std::min(hi, entry(c.row, c.col + 1));
    for (int e = lo; e <= hi; ++e) {
      entry(c.row, c.col) = e;
      self(self, p + 1);
    }
  };
  rec(rec, 0);
}

inline std::vector<SkewTableau> enumerate_tableaux(const SkewShape& shape, int n) {
  std::vector<SkewTableau> out;
  for_each_tableau(shape, n, [&](const SkewTableau& t) { out.push_back(t); });
  return out;
}

/// Counters for the Littlewood-Richardson search tree.
struct LrSearchStats {
  std::uint64_t nodes = 0;       // interior nodes (cells to fill)
  std::uint64_t dead_ends = 0;   // interior nodes with no admissible entry
  std::uint64_t leaves = 0;      // completed tableaux
};

/// Visits the Littlewood-Richardson tableaux of the shape, filling cells in
/// Semitic order so the running weight stays a partition. With `nu` only
/// tableaux of that weight are produced; with `n` entries stay below n.
template <class Visit>
void for_each_lr_tableau(const SkewShape& shape, const std::optional<Partition>& nu,
                         std::optional<int> n, Visit&& visit, LrSearchStats* stats = nullptr) {
  if (nu && nu->size() != shape.size()) return;
  if (n && *n < 0) throw PreconditionError("letter bound must be non-negative");
  const auto order = detail::search_cells(shape);
  auto rows = detail::blank_rows(shape);
  const Partition& inner = shape.inner();
  std::vector<int> alpha(static_cast<std::size_t>(shape.size()) + 1, 0);
  auto entry = [&](int i, int j) -> int& {
    return rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - inner[i])];
  };
  auto rec = [&](auto&& self, std::size_t p, int used) -> void {
    if (p == order.size()) {
      if (stats) ++stats->leaves;
      visit(SkewTableau(shape, rows, SkewTableau::trusted));
      return;
    }
    if (stats) ++stats->nodes;
    const auto& sc = order[p];
    const Cell c = sc.cell;
    const int lo = sc.has_above ? entry(c.row - 1, c.col) + 1 : 0;
    int hi = used;  // a fresh letter may only extend the alphabet by one
    if (sc.has_right) hi = std::min(hi, entry(c.row, c.col + 1));
    if (n) hi = std::min(hi, *n - 1 - sc.below);
    bool any = false;
    for (int e = lo; e <= hi; ++e) {
      const auto ue = static_cast<std::size_t>(e);
      if (e > 0 && alpha[ue - 1] <= alpha[ue]) continue;
      if (nu && alpha[ue] >= (*nu)[e]) continue;
      any = true;
      ++alpha[ue];
      entry(c.row, c.col) = e;
      self(self, p + 1, std::max(used, e + 1));
      --alpha[ue];
    }
    if (!any && stats) ++stats->dead_ends;
  };
  rec(rec, 0, 0);
}

inline std::vector<SkewTableau> enumerate_lr(const SkewShape& shape, const std::optional<Partition>& nu = std::nullopt,
                                             std::optional<int> n = std::nullopt) {
  std::vector<SkewTableau> out;
  for_each_lr_tableau(shape, nu, n, [&](const SkewTableau& t) { out.push_back(t); });
  return out;
}

/// Visits every saturated chain from the inner to the outer partition.
template <class Visit>
void for_each_standard(const SkewShape& shape, Visit&& visit) {
  std::vector<Partition> chain{shape.inner()};
  const Partition& outer = shape.outer();
  auto rec = [&](auto&& self) -> void {
    const Partition cur = chain.back();  // copied: push_back below may reallocate
    if (cur.size() == outer.size()) {
      visit(ChainTableau(chain));
      return;
    }
    for (Cell c : addable_cells(cur)) {
      if (c.col >= outer[c.row]) continue;
      chain.push_back(add_cell(cur, c));
      self(self);
      chain.pop_back();
    }
  };
  rec(rec);
}

inline std::vector<ChainTableau> enumerate_standard(const SkewShape& shape) {
  std::vector<ChainTableau> out;
  for_each_standard(shape, [&](const ChainTableau& s) { out.push_back(s); });
  return out;
}

/// Text form: rows joined by '|', each row `offset:e1,e2,...`.
inline std::string to_string(const SkewTableau& t) {
  std::string s;
  for (int i = 0; i < t.shape().rows(); ++i) {
    if (i > 0) s += '|';
    s += std::to_string(t.shape().inner()[i]);
    s += ':';
    const auto& row = t.rows()[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) s += ',';
      s += std::to_string(row[j]);
    }
  }
  return s;
}

inline std::string to_string(const ChainTableau& s) { return to_string(s.labels()); }

inline std::string word_to_string(const Word& w) {
  std::string s;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (p > 0) s += ' ';
    s += std::to_string(w[p]);
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const SkewTableau& t) { return os << '`' << to_string(t) << '`'; }
inline std::ostream& operator<<(std::ostream& os, const ChainTableau& s) { return os << '`' << to_string(s) << '`'; }

}  // namespace lrtab
