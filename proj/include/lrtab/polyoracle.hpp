#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lrtab/errors.hpp"
#include "lrtab/lr.hpp"
#include "lrtab/shapes.hpp"
#include "lrtab/tableaux.hpp"

namespace lrtab {

/// A polynomial in X_0..X_{n-1} with integer coefficients, keyed by exponent
/// vectors of length n. Zero coefficients are never stored.
class MonomialPoly {
 public:
  using Exponent = std::vector<int>;

  explicit MonomialPoly(int n = 0) : n_(n) {
    if (n < 0) throw PreconditionError("number of indeterminates must be non-negative");
  }

  static MonomialPoly one(int n) {
    MonomialPoly p(n);
    p.add(Exponent(static_cast<std::size_t>(n), 0), 1);
    return p;
  }

  void add(const Exponent& alpha, const Integer& c) {
    if (static_cast<int>(alpha.size()) != n_) throw PreconditionError("exponent vector has the wrong length");
    if (c == 0) return;
    auto [it, fresh] = coeffs_.try_emplace(alpha, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  Integer coefficient(const Exponent& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? Integer(0) : it->second;
  }

  int n() const { return n_; }
  const std::map<Exponent, Integer>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  MonomialPoly& operator+=(const MonomialPoly& other) {
    if (other.n_ != n_) throw PreconditionError("polynomials in different numbers of indeterminates");
    for (const auto& [alpha, c] : other.coeffs_) add(alpha, c);
    return *this;
  }

  MonomialPoly scaled(const Integer& factor) const {
    MonomialPoly out(n_);
    for (const auto& [alpha, c] : coeffs_) out.add(alpha, c * factor);
    return out;
  }

  friend bool operator==(const MonomialPoly&, const MonomialPoly&) = default;

 private:
  int n_;
  std::map<Exponent, Integer> coeffs_;
};

inline constexpr double kOracleTermLimit = 1e7;

/// Upper estimate of |Tab(chi, n)|: each row independently chooses a weakly
/// increasing sequence of letters.
inline double tableau_count_estimate(const SkewShape& chi, int n) {
  double estimate = 1;
  for (int i = 0; i < chi.rows(); ++i) {
    const int len = chi.row_length(i);
    // C(n + len - 1, len)
    double row = 1;
    for (int k = 1; k <= len; ++k) row = row * (n + len - k) / k;
    estimate *= row;
  }
  return estimate;
}

/// Sum over Tab(chi, n) of X^{wt T}.
inline MonomialPoly schur_monomials(const SkewShape& chi, int n) {
  if (tableau_count_estimate(chi, n) > kOracleTermLimit) {
    throw ResourceError("monomial expansion of " + to_string(chi) + " in " + std::to_string(n) + " variables is too large");
  }
  MonomialPoly p(n);
  std::map<MonomialPoly::Exponent, Integer> tally;
  for_each_tableau(chi, n, [&](const SkewTableau& t) {
    Weight w = weight(t);
    w.resize(static_cast<std::size_t>(n), 0);
    ++tally[w];
  });
  for (const auto& [w, c] : tally) p.add(w, c);
  return p;
}

inline MonomialPoly schur_monomials(const Partition& lambda, int n) { return schur_monomials(SkewShape(lambda), n); }

namespace detail {

// Sums X^alpha over index tuples i_1 <= ... <= i_d (strict when `strict`).
inline MonomialPoly index_tuples(int d, int n, bool strict) {
  if (d < 0 || n < 0) throw PreconditionError("degree and variable count must be non-negative");
  MonomialPoly p(n);
  MonomialPoly::Exponent alpha(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int remaining, int from) -> void {
    if (remaining == 0) {
      p.add(alpha, 1);
      return;
    }
    for (int i = from; i < n; ++i) {
      ++alpha[static_cast<std::size_t>(i)];
      self(self, remaining - 1, strict ? i + 1 : i);
      --alpha[static_cast<std::size_t>(i)];
    }
  };
  rec(rec, d, 0);
  return p;
}

}  // namespace detail

inline MonomialPoly elementary(int d, int n) { return detail::index_tuples(d, n, true); }
inline MonomialPoly complete(int d, int n) { return detail::index_tuples(d, n, false); }

inline MonomialPoly multiply(const MonomialPoly& a, const MonomialPoly& b) {
  if (a.n() != b.n()) throw PreconditionError("polynomials in different numbers of indeterminates");
  MonomialPoly out(a.n());
  MonomialPoly::Exponent sum(static_cast<std::size_t>(a.n()));
  for (const auto& [x, cx] : a.coeffs()) {
    for (const auto& [y, cy] : b.coeffs()) {
      for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = x[k] + y[k];
      out.add(sum, cx * cy);
    }
  }
  return out;
}

/// Fixed by every adjacent transposition of the indeterminates.
inline bool is_symmetric(const MonomialPoly& p) {
  for (const auto& [alpha, c] : p.coeffs()) {
    auto swapped = alpha;
    for (std::size_t i = 0; i + 1 < swapped.size(); ++i) {
      std::swap(swapped[i], swapped[i + 1]);
      if (p.coefficient(swapped) != c) return false;
      std::swap(swapped[i], swapped[i + 1]);
    }
  }
  return true;
}

/// m_lambda(n): the sum of all distinct permutations of X^lambda.
inline MonomialPoly monomial_symmetric(const Partition& lambda, int n) {
  MonomialPoly p(n);
  if (lambda.length() > n) return p;
  MonomialPoly::Exponent alpha(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < lambda.length(); ++i) alpha[static_cast<std::size_t>(i)] = lambda[i];
  std::sort(alpha.begin(), alpha.end());
  do {
    p.add(alpha, 1);
  } while (std::next_permutation(alpha.begin(), alpha.end()));
  return p;
}

using MBasis = std::map<Partition, Integer, std::greater<>>;

/// Coefficients on the monomial symmetric basis, read at the sorted exponents.
inline MBasis to_m_basis(const MonomialPoly& p) {
  if (!is_symmetric(p)) throw PreconditionError("polynomial is not symmetric");
  MBasis out;
  for (const auto& [alpha, c] : p.coeffs()) {
    if (is_partition(alpha)) out.emplace(Partition(alpha), c);
  }
  return out;
}

/// Decomposition on the Schur basis by unitriangular elimination: the
/// lexicographically largest partition exponent is dominance-maximal, and
/// its coefficient is that of the corresponding Schur polynomial.
inline SchurExpansion to_schur_basis(const MonomialPoly& p) {
  if (!is_symmetric(p)) throw PreconditionError("polynomial is not symmetric");
  std::optional<int> degree;
  for (const auto& [alpha, c] : p.coeffs()) {
    int d = 0;
    for (int a : alpha) d += a;
    if (degree && *degree != d) throw PreconditionError("polynomial is not homogeneous");
    degree = d;
  }
  SchurExpansion out;
  MonomialPoly rest = p;
  while (!rest.is_zero()) {
    // The map is ordered lexicographically, so the last partition key wins.
    const MonomialPoly::Exponent* top = nullptr;
    Integer c;
    for (const auto& [alpha, coeff] : rest.coeffs()) {
      if (is_partition(alpha)) {
        top = &alpha;
        c = coeff;
      }
    }
    const Partition nu(*top);
    out.add(nu, c);
    rest += schur_monomials(nu, p.n()).scaled(-c);
  }
  return out;
}

inline std::string to_string(const MonomialPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    const auto& [alpha, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      if (alpha[k] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "X" + std::to_string(k);
      if (alpha[k] > 1) mono += '^' + std::to_string(alpha[k]);
    }
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (!s.empty()) s += negative ? " - " : " + ";
    else if (negative) s += '-';
    if (mono.empty()) {
      s += mag.str();
    } else {
      s += (mag == 1 ? "" : mag.str() + "*") + mono;
    }
  }
  return s;
}

}  // namespace lrtab
