#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "lrtab/errors.hpp"
#include "lrtab/jdt.hpp"
#include "lrtab/shapes.hpp"
#include "lrtab/tableaux.hpp"

namespace lrtab {

enum class WordClass { Dominant, AntiDominant, Neutral, Neither };

inline const char* to_string(WordClass c) {
  switch (c) {
    case WordClass::Dominant: return "dominant";
    case WordClass::AntiDominant: return "anti-dominant";
    case WordClass::Neutral: return "neutral";
    case WordClass::Neither: return "neither";
  }
  return "";
}

namespace detail {

// balance[q] = (#i - #(i+1)) over the prefix w[0..q).
inline std::vector<int> balance(const Word& w, int i) {
  std::vector<int> d(w.size() + 1, 0);
  for (std::size_t q = 0; q < w.size(); ++q) d[q + 1] = d[q] + (w[q] == i) - (w[q] == i + 1);
  return d;
}

// Reference implementation by bracket matching: each i opens, each i+1
// closes. e_i acts on the rightmost unmatched i+1, f_i on the leftmost
// unmatched i.
inline std::optional<std::size_t> bracket_raise_position(const Word& w, int i) {
  std::vector<std::size_t> open;
  std::optional<std::size_t> last_unmatched;
  for (std::size_t q = 0; q < w.size(); ++q) {
    if (w[q] == i) {
      open.push_back(q);
    } else if (w[q] == i + 1) {
      if (open.empty()) {
        last_unmatched = q;
      } else {
        open.pop_back();
      }
    }
  }
  return last_unmatched;
}

inline std::optional<std::size_t> bracket_lower_position(const Word& w, int i) {
  std::vector<std::size_t> open;
  for (std::size_t q = 0; q < w.size(); ++q) {
    if (w[q] == i) {
      open.push_back(q);
    } else if (w[q] == i + 1 && !open.empty()) {
      open.pop_back();
    }
  }
  if (open.empty()) return std::nullopt;
  return open.front();
}

}  // namespace detail

inline bool is_dominant_for(const Word& w, int i) {
  int d = 0;
  for (int letter : w) {
    d += (letter == i) - (letter == i + 1);
    if (d < 0) return false;
  }
  return true;
}

inline bool is_anti_dominant_for(const Word& w, int i) {
  int d = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    d += (*it == i + 1) - (*it == i);
    if (d < 0) return false;
  }
  return true;
}

inline WordClass word_class(const Word& w, int i) {
  const bool dom = is_dominant_for(w, i);
  const bool anti = is_anti_dominant_for(w, i);
  if (dom && anti) return WordClass::Neutral;
  if (dom) return WordClass::Dominant;
  if (anti) return WordClass::AntiDominant;
  return WordClass::Neither;
}

/// Every prefix has partition weight.
inline bool is_dominant(const Word& w) {
  std::vector<int> alpha;
  for (int letter : w) {
    const auto l = static_cast<std::size_t>(letter);
    if (l >= alpha.size()) alpha.resize(l + 1, 0);
    ++alpha[l];
    if (l > 0 && alpha[l] > alpha[l - 1]) return false;
  }
  return true;
}

/// Position of the letter i+1 that e_i would decrement: the letter just
/// before the longest suffix dominant for i. Absent when w is dominant for i.
inline std::optional<std::size_t> raise_position(const Word& w, int i) {
  const auto d = detail::balance(w, i);
  // The suffix w[q..) is dominant iff d[q] <= d[r] for every r >= q.
  std::vector<int> suffix_min(d.size());
  suffix_min.back() = d.back();
  for (std::size_t q = d.size() - 1; q-- > 0;) suffix_min[q] = std::min(d[q], suffix_min[q + 1]);
  std::size_t q = 0;
  while (d[q] > suffix_min[q]) ++q;
  if (q == 0) return std::nullopt;
  if (w[q - 1] != i + 1) throw std::logic_error("raise: letter before the dominant suffix is not i+1");
  return q - 1;
}

/// Position of the letter i that f_i would increment: the letter just after
/// the longest prefix anti-dominant for i. Absent when w is anti-dominant for i.
inline std::optional<std::size_t> lower_position(const Word& w, int i) {
  const auto d = detail::balance(w, i);
  // The prefix w[0..q) is anti-dominant iff d[q] <= d[r] for every r <= q.
  std::size_t best = 0;
  int prefix_min = d[0];
  for (std::size_t q = 0; q < d.size(); ++q) {
    prefix_min = std::min(prefix_min, d[q]);
    if (d[q] <= prefix_min) best = q;
  }
  if (best == w.size()) return std::nullopt;
  if (w[best] != i) throw std::logic_error("lower: letter after the anti-dominant prefix is not i");
  return best;
}

/// e_i on words.
inline std::optional<Word> raise(const Word& w, int i) {
  const auto p = raise_position(w, i);
  if (!p) return std::nullopt;
  Word out = w;
  --out[*p];
  return out;
}

/// f_i on words.
inline std::optional<Word> lower(const Word& w, int i) {
  const auto p = lower_position(w, i);
  if (!p) return std::nullopt;
  Word out = w;
  ++out[*p];
  return out;
}

namespace detail {

// Applies e_i or f_i to a tableau through its Semitic word and checks that
// the Kanji word selects the same cell.
inline std::optional<std::pair<SkewTableau, std::size_t>> coplactic_tab(const SkewTableau& t, int i, bool up) {
  const auto semitic = reading_cells(t.shape(), ReadingOrder::Semitic);
  const Word w = reading_word(t, ReadingOrder::Semitic);
  const auto p = up ? raise_position(w, i) : lower_position(w, i);
  if (!p) return std::nullopt;
  const Cell c = semitic[*p];
  const auto kanji = reading_cells(t.shape(), ReadingOrder::Kanji);
  const Word wk = reading_word(t, ReadingOrder::Kanji);
  const auto pk = up ? raise_position(wk, i) : lower_position(wk, i);
  if (!pk || !(kanji[*pk] == c)) throw std::logic_error("coplactic operation depends on the reading order");
  try {
    return std::make_pair(t.with_entry(c, up ? i : i + 1), *p);
  } catch (const CellError&) {
    throw std::logic_error("coplactic operation broke semistandardness");
  }
}

}  // namespace detail

inline std::optional<SkewTableau> raise_tab(const SkewTableau& t, int i) {
  auto r = detail::coplactic_tab(t, i, true);
  if (!r) return std::nullopt;
  return std::move(r->first);
}

inline std::optional<SkewTableau> lower_tab(const SkewTableau& t, int i) {
  auto r = detail::coplactic_tab(t, i, false);
  if (!r) return std::nullopt;
  return std::move(r->first);
}

/// Number of times e_i can be applied in succession.
inline int raise_bound(const SkewTableau& t, int i) {
  int count = 0;
  Word w = reading_word(t);
  while (auto next = raise(w, i)) {
    w = std::move(*next);
    ++count;
  }
  return count;
}

/// Number of times f_i can be applied in succession.
inline int lower_bound(const SkewTableau& t, int i) {
  int count = 0;
  Word w = reading_word(t);
  while (auto next = lower(w, i)) {
    w = std::move(*next);
    ++count;
  }
  return count;
}

enum class TracePolicy { MinIndex, MaxIndex, Custom };

struct TraceStep {
  char kind = 'e';  // 'e' raises, 'f' lowers
  int index = 0;
  std::size_t position = 0;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct RaisingTrace {
  std::vector<TraceStep> steps;
  TracePolicy policy = TracePolicy::Custom;
};

/// Replays a trace on a word, checking each recorded position.
inline Word replay(Word w, const RaisingTrace& trace) {
  for (const auto& s : trace.steps) {
    const auto p = s.kind == 'e' ? raise_position(w, s.index) : lower_position(w, s.index);
    if (!p || *p != s.position) throw PreconditionError("trace step does not apply to the word");
    w[*p] += s.kind == 'e' ? -1 : 1;
  }
  return w;
}

inline std::string trace_to_string(const RaisingTrace& trace) {
  std::string s;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    if (k > 0) s += ' ';
    s += trace.steps[k].kind;
    s += '_' + std::to_string(trace.steps[k].index) + '@' + std::to_string(trace.steps[k].position);
  }
  return s;
}

/// Raises until dominant, choosing the smallest (MinIndex) or largest
/// (MaxIndex) applicable index at each step.
inline std::pair<Word, RaisingTrace> dominant_normal_form(Word w, TracePolicy policy = TracePolicy::MinIndex) {
  if (policy == TracePolicy::Custom) throw PreconditionError("normal form needs the min-index or max-index policy");
  RaisingTrace trace{{}, policy};
  const int top = w.empty() ? 0 : *std::max_element(w.begin(), w.end());
  for (;;) {
    std::optional<std::size_t> pos;
    int index = -1;
    for (int k = 0; k < top; ++k) {
      const int i = policy == TracePolicy::MinIndex ? k : top - 1 - k;
      pos = raise_position(w, i);
      if (pos) {
        index = i;
        break;
      }
    }
    if (!pos) return {std::move(w), std::move(trace)};
    --w[*pos];
    trace.steps.push_back({'e', index, *pos});
  }
}

/// The tableau version: the trace positions refer to the Semitic word.
inline std::pair<SkewTableau, RaisingTrace> dominant_normal_form(const SkewTableau& t,
                                                                 TracePolicy policy = TracePolicy::MinIndex) {
  auto [w, trace] = dominant_normal_form(reading_word(t), policy);
  return {fill_from_word(t.shape(), w), std::move(trace)};
}

struct RobinsonPair {
  SkewTableau l;  // raising normal form, a Littlewood-Richardson tableau
  SkewTableau p;  // rectification
};

inline RobinsonPair rob(const SkewTableau& t) {
  return {dominant_normal_form(t).first, rectify(t).tableau};
}

/// The tableau T with rob(T) = (L, P).
inline SkewTableau rob_inverse(const SkewTableau& l, const SkewTableau& p) {
  if (!is_lr_tableau(l)) throw PreconditionError("first tableau is not a Littlewood-Richardson tableau");
  if (!p.shape().is_partition_shape() || !(Partition(weight(l)) == p.shape().outer())) {
    throw PreconditionError("second tableau must have the weight of the first as its shape");
  }
  return phi(l, p);
}

struct ComponentEdge {
  std::size_t from = 0;
  std::size_t to = 0;  // to = f_label(from)
  int label = 0;
};

struct ComponentSummary {
  std::vector<Word> vertices;  // BFS order from the root
  std::vector<ComponentEdge> edges;
  std::map<Weight, std::size_t> weight_counts;  // weights padded to length n

  std::size_t same_weight_as_root() const {
    return weight_counts.at(padded(vertices.front()));
  }

  Weight padded(const Word& w) const {
    Weight wt = word_weight(w);
    wt.resize(static_cast<std::size_t>(n), 0);
    return wt;
  }

  int n = 0;
};

inline constexpr std::size_t kDefaultVertexCap = 1'000'000;

/// The connected component of w in the coplactic graph on words over
/// {0..n-1}, explored breadth first; at each vertex f_i then e_i for i
/// ascending.
inline ComponentSummary coplactic_component(const Word& w, int n, std::size_t cap = kDefaultVertexCap) {
  for (int letter : w) {
    if (letter < 0 || letter >= n) throw PreconditionError("letter " + std::to_string(letter) + " is outside the alphabet");
  }
  ComponentSummary out;
  out.n = n;
  std::unordered_map<Word, std::size_t, boost::hash<Word>> index;
  auto visit = [&](Word v) -> std::size_t {
    auto [it, fresh] = index.try_emplace(v, out.vertices.size());
    if (fresh) {
      if (out.vertices.size() >= cap) {
        throw ResourceError("coplactic component exceeds " + std::to_string(cap) + " vertices");
      }
      out.vertices.push_back(std::move(v));
    }
    return it->second;
  };
  visit(w);
  for (std::size_t head = 0; head < out.vertices.size(); ++head) {
    for (int i = 0; i + 1 < n; ++i) {
      if (auto down = lower(out.vertices[head], i)) {
        const std::size_t to = visit(std::move(*down));
        out.edges.push_back({head, to, i});
      }
      if (auto up = raise(out.vertices[head], i)) visit(std::move(*up));
    }
  }
  for (const auto& v : out.vertices) ++out.weight_counts[out.padded(v)];
  return out;
}

/// Result of an inward slide on the companion tableau, seen from T.
struct CompanionSlide {
  std::vector<int> raises;  // indices k, k+1, ..., l-1 of the applied e_i
  SkewTableau tableau;      // T_l
  SkewTableau companion;    // the slid companion tableau
  Partition kappa;
  Partition nu;
};

/// Slides companion(T, kappa) inward into `start` (a corner of kappa) and
/// reads off the raising operations on T. Letters of the Semitic word of T
/// carry ordinates; letter i with ordinate j stands for cell (i, j) of the
/// companion tableau, so a move from (i+1, j) to (i, j) is e_i on T.
inline CompanionSlide companion_slide(const SkewTableau& t, const Partition& kappa, Cell start) {
  const SkewTableau comp = companion(t, kappa);
  if (!is_removable(kappa, start)) throw PreconditionError("slide must start at a corner of kappa");
  const Word w = reading_word(t);
  // Label tableau: cell (letter, ordinate) holds the word position.
  std::vector<std::vector<int>> labels = comp.rows();
  std::vector<int> next_ordinate(kappa.parts());
  next_ordinate.resize(std::max<std::size_t>(next_ordinate.size(), static_cast<std::size_t>(t.max_entry() + 1)), 0);
  for (std::size_t p = 0; p < w.size(); ++p) {
    const auto l = static_cast<std::size_t>(w[p]);
    const int ord = next_ordinate[l]++;
    labels[l][static_cast<std::size_t>(ord - kappa[static_cast<int>(l)])] = static_cast<int>(p);
  }
  detail::SlideGrid g(SkewTableau(comp.shape(), std::move(labels), SkewTableau::trusted));
  Word slid = w;
  CompanionSlide out;
  const Cell end = detail::slide_hole_inward(g, start, [&](Cell from, Cell to) {
    if (from.row == to.row + 1) {
      const auto p = static_cast<std::size_t>(g.get(from));
      if (raise_position(slid, to.row) != p) throw std::logic_error("companion slide disagrees with e_i");
      --slid[p];
      out.raises.push_back(to.row);
    }
  });
  out.kappa = remove_cell(kappa, start);
  out.nu = remove_cell(comp.shape().outer(), end);
  out.tableau = fill_from_word(t.shape(), slid);
  out.companion = inward_slide(comp, start).tableau;
  if (!(companion(out.tableau, out.kappa) == out.companion)) throw std::logic_error("slid tableau is not the companion");
  SkewTableau step = t;
  for (int i : out.raises) {
    if (is_dominant_for(step, out.kappa)) throw std::logic_error("an earlier tableau in the chain is already dominant");
    step = *raise_tab(step, i);
  }
  return out;
}

/// A product of factors S_{r,s} (r < s) with multiplicities.
struct RobinsonMonomial {
  std::map<std::pair<int, int>, int> factors;

  friend bool operator==(const RobinsonMonomial&, const RobinsonMonomial&) = default;
};

inline std::string to_string(const RobinsonMonomial& m) {
  std::string s;
  for (const auto& [rs, mult] : m.factors) {
    if (!s.empty()) s += ' ';
    s += "S" + std::to_string(rs.first) + std::to_string(rs.second);
    if (mult > 1) s += '^' + std::to_string(mult);
  }
  return s.empty() ? "1" : s;
}

struct Association {
  RobinsonMonomial monomial;
  std::vector<std::pair<int, int>> factors;  // (r, s) in trace order
};

/// Groups a min-index raising trace into maximal runs e_{s-1}, e_{s-2}, ...,
/// e_r, each giving a factor S_{r,s}.
inline Association association_monomial(const RaisingTrace& trace) {
  if (trace.policy != TracePolicy::MinIndex) throw PreconditionError("association needs a min-index trace");
  Association out;
  std::size_t k = 0;
  while (k < trace.steps.size()) {
    if (trace.steps[k].kind != 'e') throw PreconditionError("association needs a trace of raising operations");
    const int s = trace.steps[k].index + 1;
    int r = trace.steps[k].index;
    ++k;
    while (k < trace.steps.size() && trace.steps[k].kind == 'e' && trace.steps[k].index == r - 1) {
      --r;
      ++k;
    }
    out.factors.emplace_back(r, s);
    ++out.monomial.factors[{r, s}];
  }
  return out;
}

/// Reconstructs the Young tableau P from an association monomial and the
/// weight alpha of the source: row r of P holds lambda_rs letters s for
/// s > r, and alpha_r minus the letters r placed in earlier rows.
inline SkewTableau monomial_tableau(const RobinsonMonomial& m, const Weight& alpha) {
  std::size_t letters = alpha.size();
  for (const auto& [rs, mult] : m.factors) {
    if (rs.first < 0 || rs.first >= rs.second || mult <= 0) throw PreconditionError("malformed monomial factor");
    letters = std::max(letters, static_cast<std::size_t>(rs.second) + 1);
  }
  std::vector<std::vector<int>> count(letters, std::vector<int>(letters, 0));
  for (const auto& [rs, mult] : m.factors) count[static_cast<std::size_t>(rs.first)][static_cast<std::size_t>(rs.second)] += mult;
  for (std::size_t s = 0; s < letters; ++s) {
    int diag = s < alpha.size() ? alpha[s] : 0;
    for (std::size_t r = 0; r < s; ++r) diag -= count[r][s];
    if (diag < 0) throw PreconditionError("monomial is inconsistent with the weight");
    count[s][s] = diag;
  }
  std::vector<std::vector<int>> rows;
  std::vector<int> lengths;
  for (std::size_t r = 0; r < letters; ++r) {
    std::vector<int> row;
    for (std::size_t s = r; s < letters; ++s) row.insert(row.end(), static_cast<std::size_t>(count[r][s]), static_cast<int>(s));
    lengths.push_back(static_cast<int>(row.size()));
    rows.push_back(std::move(row));
  }
  if (!is_partition(lengths)) throw PreconditionError("monomial does not give a Young tableau");
  Partition shape(lengths);
  rows.resize(static_cast<std::size_t>(shape.length()));
  return SkewTableau(SkewShape(shape), std::move(rows));
}

}  // namespace lrtab
