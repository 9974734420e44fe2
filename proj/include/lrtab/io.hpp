#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lrtab/errors.hpp"
#include "lrtab/lr.hpp"
#include "lrtab/shapes.hpp"
#include "lrtab/tableaux.hpp"

namespace lrtab {

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }

  void skip_spaces() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  int number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a non-negative integer");
    long value = 0;
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) throw ParseError("integer too large", start);
      ++pos_;
    }
    return static_cast<int>(value);
  }

  void expect_end() {
    if (!done()) fail("unexpected trailing text");
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Partition scan_partition(Scanner& s) {
  s.skip_spaces();
  const std::size_t start = s.pos();
  s.expect('[');
  std::vector<int> parts;
  s.skip_spaces();
  if (!s.accept(']')) {
    for (;;) {
      s.skip_spaces();
      parts.push_back(s.number());
      s.skip_spaces();
      if (s.accept(']')) break;
      s.expect(',');
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError&) {
    throw ParseError("parts are not weakly decreasing", start);
  }
}

}  // namespace detail

/// `[4,2,1]`; the zero partition is `[]`.
inline Partition parse_partition(std::string_view text) {
  detail::Scanner s(text);
  Partition p = detail::scan_partition(s);
  s.skip_spaces();
  s.expect_end();
  return p;
}

/// `[6,5,5,3,2]/[4,2,1]`, or a bare partition for a straight shape.
inline SkewShape parse_skew_shape(std::string_view text) {
  detail::Scanner s(text);
  Partition outer = detail::scan_partition(s);
  s.skip_spaces();
  Partition inner;
  const std::size_t slash = s.pos();
  if (s.accept('/')) inner = detail::scan_partition(s);
  s.skip_spaces();
  s.expect_end();
  if (!contains(outer, inner)) throw ParseError("inner partition is not contained in the outer one", slash);
  return SkewShape(std::move(outer), std::move(inner));
}

/// Rows separated by `|`, each `offset:e1,e2,...`; the empty string is the
/// empty tableau. Semistandardness is checked and reported by cell.
inline SkewTableau parse_tableau(std::string_view text) {
  if (text.empty()) return SkewTableau{};
  detail::Scanner s(text);
  std::vector<int> inner;
  std::vector<int> outer;
  std::vector<std::vector<int>> rows;
  std::vector<std::size_t> row_starts;
  for (;;) {
    row_starts.push_back(s.pos());
    const int offset = s.number();
    s.expect(':');
    std::vector<int> row;
    if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
      row.push_back(s.number());
      while (s.accept(',')) row.push_back(s.number());
    }
    inner.push_back(offset);
    outer.push_back(offset + static_cast<int>(row.size()));
    rows.push_back(std::move(row));
    if (s.done()) break;
    s.expect('|');
  }
  if (outer.back() == 0) throw ParseError("trailing empty row", row_starts.back());
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (inner[i] > inner[i - 1] || outer[i] > outer[i - 1]) throw ParseError("rows do not form a skew shape", row_starts[i]);
  }
  return SkewTableau(SkewShape(Partition(outer), Partition(inner)), std::move(rows));
}

/// Space-separated non-negative letters.
inline Word parse_word(std::string_view text) {
  detail::Scanner s(text);
  Word w;
  s.skip_spaces();
  while (!s.done()) {
    w.push_back(s.number());
    if (!s.done() && !std::isspace(static_cast<unsigned char>(s.peek()))) s.fail("expected a space between letters");
    s.skip_spaces();
  }
  return w;
}

inline std::string format_tableau(const SkewTableau& t) { return to_string(t); }

inline nlohmann::json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

/// `{"expansion": [{"partition": [...], "coeff": N}, ...]}`
inline nlohmann::json to_json(const SchurExpansion& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : e.terms()) terms.push_back({{"partition", p.parts()}, {"coeff", integer_to_json(c)}});
  return {{"expansion", std::move(terms)}};
}

}  // namespace lrtab
