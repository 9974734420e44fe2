#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrtab/errors.hpp"
#include "lrtab/jdt.hpp"
#include "lrtab/shapes.hpp"
#include "lrtab/tableaux.hpp"

namespace lrtab {

using Integer = boost::multiprecision::cpp_int;

/// A linear combination of Schur functions. Zero coefficients are never
/// stored; terms iterate in lexicographically decreasing partition order.
class SchurExpansion {
 public:
  using Terms = std::map<Partition, Integer, std::greater<>>;

  void add(const Partition& p, const Integer& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(p, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Integer coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  /// Sum of all coefficients.
  Integer total() const {
    Integer sum = 0;
    for (const auto& [p, c] : terms_) sum += c;
    return sum;
  }

  /// Only the terms whose partition has at most n parts.
  SchurExpansion truncated(int n) const {
    SchurExpansion out;
    for (const auto& [p, c] : terms_) {
      if (p.length() <= n) out.add(p, c);
    }
    return out;
  }

  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  Terms terms_;
};

/// Text form `1*[6,4,1] + 2*[5,5,1]`; the zero expansion prints as `0`.
inline std::string to_string(const SchurExpansion& e) {
  if (e.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [p, c] : e.terms()) {
    if (first) {
      s += c.str() + "*" + to_string(p);
    } else if (c < 0) {
      s += " - " + Integer(-c).str() + "*" + to_string(p);
    } else {
      s += " + " + c.str() + "*" + to_string(p);
    }
    first = false;
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const SchurExpansion& e) { return os << to_string(e); }

/// c_chi^nu, the number of Littlewood-Richardson tableaux of shape chi and weight nu.
inline Integer lr_coefficient(const SkewShape& chi, const Partition& nu) {
  if (chi.size() != nu.size()) throw PreconditionError("shape and partition sizes differ");
  Integer count = 0;
  for_each_lr_tableau(chi, nu, std::nullopt, [&](const SkewTableau&) { ++count; });
  return count;
}

/// c_{lambda,mu}^nu.
inline Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  return lr_coefficient(product_shape(lambda, mu), nu);
}

/// s_chi in the Schur basis, optionally keeping only partitions with at most n parts.
inline SchurExpansion skew_expand(const SkewShape& chi, std::optional<int> n = std::nullopt) {
  SchurExpansion out;
  std::map<Weight, Integer> tally;
  for_each_lr_tableau(chi, std::nullopt, n, [&](const SkewTableau& t) { ++tally[weight(t)]; });
  for (const auto& [w, c] : tally) out.add(Partition(w), c);
  return out;
}

inline SchurExpansion schur_product(const Partition& lambda, const Partition& mu) {
  return skew_expand(product_shape(lambda, mu));
}

/// Number of tableaux of shape lambda and weight mu (any composition), by
/// peeling off the largest letter as a horizontal strip.
inline Integer kostka(const Partition& lambda, const Weight& mu) {
  int total = 0;
  for (int m : mu) {
    if (m < 0) throw PreconditionError("negative weight component");
    total += m;
  }
  if (total != lambda.size()) throw PreconditionError("shape and weight sizes differ");
  std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
  auto rec = [&](auto&& self, const std::vector<int>& shape, std::size_t letters) -> Integer {
    if (letters == 0) return shape.empty() || shape[0] == 0 ? 1 : 0;
    if (static_cast<int>(std::count_if(shape.begin(), shape.end(), [](int x) { return x > 0; })) > static_cast<int>(letters)) return 0;
    auto key = std::make_pair(shape, letters);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int strip = mu[letters - 1];
    Integer sum = 0;
    std::vector<int> inner(shape.size(), 0);
    // inner[i] ranges over [shape[i+1], shape[i]] with total removal = strip.
    auto choose = [&](auto&& next, std::size_t i, int remaining) -> void {
      if (i == shape.size()) {
        if (remaining == 0) sum += self(self, inner, letters - 1);
        return;
      }
      const int below = i + 1 < shape.size() ? shape[i + 1] : 0;
      for (int keep = shape[i]; keep >= below; --keep) {
        const int removed = shape[i] - keep;
        if (removed > remaining) break;
        inner[i] = keep;
        next(next, i + 1, remaining - removed);
      }
    };
    choose(choose, 0, strip);
    memo.emplace(std::move(key), sum);
    return sum;
  };
  return rec(rec, lambda.parts(), mu.size());
}

/// s_lambda * s_(r): every partition obtained by adding a horizontal strip of r cells.
inline SchurExpansion pieri_row(const Partition& lambda, int r) {
  if (r < 0) throw PreconditionError("strip size must be non-negative");
  SchurExpansion out;
  const int rows = lambda.length() + 1;
  std::vector<int> nu(static_cast<std::size_t>(rows), 0);
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == rows) {
      if (remaining == 0) out.add(Partition(nu), 1);
      return;
    }
    const int cap = i == 0 ? lambda[0] + remaining : std::min(lambda[i - 1], lambda[i] + remaining);
    for (int v = lambda[i]; v <= cap; ++v) {
      nu[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, remaining - (v - lambda[i]));
    }
  };
  rec(rec, 0, r);
  return out;
}

enum class Direction { Forward, Backward };

namespace detail {

inline void require_lr(const SkewTableau& t, const SkewShape& shape, const char* what) {
  if (!(t.shape() == shape)) throw PreconditionError(std::string(what) + ": expected shape " + to_string(shape));
  if (auto bad = dominance_failure(t, Partition{})) {
    throw CellError(std::string(what) + ": not a Littlewood-Richardson tableau", bad->row, bad->col);
  }
}

}  // namespace detail

/// Forward: L in LR(lambda*mu, nu) goes to the companion, over mu, of its
/// lambda part, an element of LR(nu/mu, lambda). Backward inverts this by
/// stacking the companion of the input under a translated Can_mu.
inline SkewTableau factor_bijection(const SkewTableau& t, const Partition& lambda, const Partition& mu,
                                    Direction direction) {
  const SkewShape product = product_shape(lambda, mu);
  const int r = mu.length();
  if (direction == Direction::Forward) {
    detail::require_lr(t, product, "factor bijection");
    std::vector<std::vector<int>> rows(t.rows().begin() + r, t.rows().end());
    const SkewTableau lower_part(SkewShape(lambda), std::move(rows));
    return companion(lower_part, mu);
  }
  if (!(t.shape().inner() == mu) || !(Partition(weight(t)) == lambda) || !is_lr_tableau(t)) {
    throw PreconditionError("factor bijection: expected a Littlewood-Richardson tableau over " + to_string(mu) +
                            " of weight " + to_string(lambda));
  }
  const SkewTableau lower_part = companion(t, Partition{});
  std::vector<std::vector<int>> rows = canonical(mu).rows();
  for (const auto& row : lower_part.rows()) rows.push_back(row);
  return SkewTableau(product, std::move(rows));
}

/// T in LR(nu/mu, lambda) goes to T* in LR(nu/lambda, mu) with
/// X(Can_mu, T) = (Can_lambda, T*).
inline SkewTableau switch_bijection(const SkewTableau& t, const Partition& lambda, const Partition& mu) {
  if (!(t.shape().inner() == mu) || !(Partition(weight(t)) == lambda) || !is_lr_tableau(t)) {
    throw PreconditionError("switch bijection: expected a Littlewood-Richardson tableau over " + to_string(mu) +
                            " of weight " + to_string(lambda));
  }
  auto result = tableau_switch(canonical(mu), t);
  if (!(result.inner == canonical(lambda))) throw std::logic_error("switching did not produce the canonical tableau");
  return std::move(result.outer);
}

/// A bijection LR(lambda*mu, nu) -> LR(mu*lambda, nu).
inline SkewTableau commute_bijection(const SkewTableau& l, const Partition& lambda, const Partition& mu) {
  const SkewTableau m = factor_bijection(l, lambda, mu, Direction::Forward);
  const SkewTableau star = switch_bijection(m, lambda, mu);
  return factor_bijection(star, mu, lambda, Direction::Backward);
}

/// Number of standard tableaux of the shape.
inline Integer count_standard(const SkewShape& shape) {
  Integer count = 0;
  for_each_standard(shape, [&](const ChainTableau&) { ++count; });
  return count;
}

}  // namespace lrtab
