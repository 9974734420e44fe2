// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include <sys/resource.h>

#include "properties.hpp"

using namespace lrtab;
using lrtab::testing::tab;
using lrtab::testing::word;
namespace golden = lrtab::testing::golden;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<Partition> partitions_up_to(int size) {
  std::vector<Partition> out;
  for (int d = 0; d <= size; ++d) {
    for (auto& p : partitions_of(d)) out.push_back(p);
  }
  return out;
}

std::size_t count_tableaux(const SkewShape& shape, int n) {
  std::size_t count = 0;
  for_each_tableau(shape, n, [&](const SkewTableau&) { ++count; });
  return count;
}

Outcome schur_expansion() {
  const MonomialPoly s = schur_monomials(Partition{4, 2, 1}, 3);
  Integer terms = 0;
  for (const auto& [alpha, c] : s.coeffs()) terms += c;
  const MBasis m = to_m_basis(s);
  const bool pass = terms == 15 && m == MBasis{{{4, 2, 1}, 1}, {{3, 3, 1}, 1}, {{3, 2, 2}, 2}};
  return {pass, "terms=" + terms.str() + " distinct=" + std::to_string(s.size()) + " m-coefficients=" +
                    std::to_string(m.size())};
}

Outcome product_benchmark() {
  const SchurExpansion e = schur_product({4, 3, 1}, {2, 2, 1});
  Integer dimension = 0;
  for (const auto& [nu, c] : e.terms()) dimension += c * count_standard(SkewShape(nu));
  return {e.total() == 34 && dimension == 450450, "total=" + e.total().str() + " dimension=" + dimension.str()};
}

Outcome vanishing_coefficient() {
  const Integer c = lr_coefficient({2, 2}, {2, 2}, {4, 2, 1, 1});
  return {c == 0, "c=" + c.str()};
}

Outcome word_rewriting() {
  const Word w = word(golden::kCopex);
  const auto [min_nf, min_trace] = dominant_normal_form(w, TracePolicy::MinIndex);
  const auto [max_nf, max_trace] = dominant_normal_form(w, TracePolicy::MaxIndex);
  const bool pass =
      trace_to_string(min_trace) == "e_0@5 e_3@0 e_2@0 e_1@0 e_0@0 e_4@7 e_3@10 e_2@10 e_1@11 e_4@3 e_3@3 e_2@3 e_1@4" &&
      trace_to_string(max_trace) == "e_4@7 e_3@10 e_3@0 e_4@3 e_2@10 e_2@0 e_3@3 e_1@0 e_2@3 e_0@5 e_1@11 e_0@0 e_1@4" &&
      min_nf == word(golden::kCopexNormal) && max_nf == min_nf;
  return {pass, std::to_string(min_trace.steps.size()) + "+" + std::to_string(max_trace.steps.size()) + " steps"};
}

Outcome crystal_component() {
  const auto c = coplactic_component(word(golden::kCopex), 6);
  rusage usage{};
  getrusage(RUSAGE_SELF, &usage);
  const long peak_mb = usage.ru_maxrss / 1024;  // kilobytes on Linux
  return {c.vertices.size() == 53460 && c.same_weight_as_root() == 120 && peak_mb < 1024,
          "vertices=" + std::to_string(c.vertices.size()) + " same_weight=" + std::to_string(c.same_weight_as_root()) +
              " peak_rss=" + std::to_string(peak_mb) + " MB of 1024"};
}

Outcome figure_grid() {
  const auto& g = golden::kGrid;
  const std::size_t rows = g.size();
  const std::size_t cols = g[0].size();
  // Built twice: raising up each column first, and sliding along each row first.
  std::vector<std::vector<SkewTableau>> up(rows, std::vector<SkewTableau>(cols));
  std::vector<std::vector<SkewTableau>> left(rows, std::vector<SkewTableau>(cols));
  up[rows - 1][cols - 1] = left[rows - 1][cols - 1] = tab(g[rows - 1][cols - 1]);
  auto raise_row = [&](const SkewTableau& t, std::size_t r) {
    SkewTableau out = t;
    for (int i : golden::kGridRaises[rows - 1 - r]) out = raise_tab(out, i).value();
    return out;
  };
  for (std::size_t c = cols; c-- > 0;) {
    if (c + 1 < cols) up[rows - 1][c] = inward_slide(up[rows - 1][c + 1], golden::kGridSlides[c]).tableau;
    for (std::size_t r = rows - 1; r-- > 0;) up[r][c] = raise_row(up[r + 1][c], r + 1);
  }
  for (std::size_t r = rows; r-- > 0;) {
    if (r + 1 < rows) left[r][cols - 1] = raise_row(left[r + 1][cols - 1], r + 1);
    for (std::size_t c = cols - 1; c-- > 0;) left[r][c] = inward_slide(left[r][c + 1], golden::kGridSlides[c]).tableau;
  }
  int matches = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (up[r][c] == tab(g[r][c]) && left[r][c] == up[r][c]) ++matches;
    }
  }
  return {matches == 25, std::to_string(matches) + "/25 cells"};
}

Outcome robinson_golden() {
  const SkewTableau t = tab(golden::kT);
  const auto r = rob(t);
  const bool pass = r.l == tab(golden::kGrid[0][4]) && r.p == tab(golden::kGrid[4][0]) && rob_inverse(r.l, r.p) == t;
  return {pass, "L=" + to_string(r.l)};
}

Outcome oracle_equivalence() {
  const auto parts = partitions_up_to(4);
  int pairs = 0;
  int agree = 0;
  for (const auto& a : parts) {
    for (const auto& b : parts) {
      ++pairs;
      const SchurExpansion oracle = to_schur_basis(multiply(schur_monomials(a, 4), schur_monomials(b, 4)));
      if (oracle == schur_product(a, b).truncated(4)) ++agree;
    }
  }
  return {agree == pairs, std::to_string(agree) + "/" + std::to_string(pairs) + " pairs"};
}

Outcome property_suite() {
  using namespace lrtab::testing;
  constexpr int n = 1000;
  const int failures = check_rectify_order(1, n) + check_switch_involution(2, n) + check_switch_glue(3, n) +
                       check_dual_equivalence_laws(4, n) + check_destandardise(5, n) + check_bender_knuth(6, n) +
                       check_slide_standardisation(7, n);
  return {failures == 0, "7 laws x " + std::to_string(n) + " instances, failures=" + std::to_string(failures)};
}

Outcome bijection_cardinality() {
  const std::vector<SkewShape> shapes = {SkewShape({3, 2, 1}, {1}), SkewShape({4, 2}, {1}), product_shape({2, 1}, {2, 1})};
  const int n = 3;
  bool pass = true;
  std::string detail;
  for (const auto& chi : shapes) {
    const std::size_t total = count_tableaux(chi, n);
    std::size_t sum = 0;
    const SchurExpansion e = skew_expand(chi);
    for (const auto& [nu, c] : e.terms()) sum += static_cast<std::size_t>(c) * count_tableaux(SkewShape(nu), n);
    std::size_t round_trips = 0;
    for_each_tableau(chi, n, [&](const SkewTableau& t) {
      const auto r = rob(t);
      if (is_lr_tableau(r.l) && rob_inverse(r.l, r.p) == t) ++round_trips;
    });
    pass = pass && total == sum && round_trips == total;
    detail += (detail.empty() ? "" : " ") + std::to_string(total);
  }
  return {pass, "|Tab| = " + detail};
}

Outcome golden_cases() {
  bool pass = true;
  // phi of the switching section.
  const SkewTableau l = tab("4:2,7,11|3:5,9|1:0,1,10|1:3,12|0:4,6|0:8");
  const SkewTableau p = tab("0:0,2,4,5,9|0:1,3,7|0:6,10,12|0:8,11");
  pass = pass && phi(l, p) == tab("4:2,5,9|3:4,7|1:0,3,10|1:1,12|0:6,11|0:8");
  pass = pass && switch_bijection(tab(golden::kL), {5, 4, 3, 1, 1}, {4, 2, 1}) == tab(golden::kLstar);
  // Companion slides.
  const SkewTableau t = tab(golden::kT);
  const auto first = companion_slide(t, golden::kKappa, {0, 5});
  const auto second = companion_slide(first.tableau, first.kappa, {0, 4});
  pass = pass && first.raises == std::vector<int>{0} && first.kappa == Partition{5, 4, 4, 2, 1} &&
         first.companion == tab("5:0,1,1,2|4:0,1,3|4:2,2|2:1,2,4|1:3,3|0:3,4") &&
         second.raises == std::vector<int>{0, 1} && second.kappa == Partition{4, 4, 4, 2, 1} &&
         second.tableau == tab("3:0,0|1:0,0,1,3|0:0,1,2,3|0:1,4,4,5|0:3,5") &&
         second.companion == tab("4:0,0,1,1,2|4:1,2,3|4:2|2:1,2,4|1:3,3|0:3,4");
  // Raise and lower bounds.
  pass = pass && raise_bound(t, 1) == 0 && raise_bound(t, 3) == 0 && lower_bound(t, 3) == 1 && raise_bound(t, 0) == 2 &&
         lower_bound(t, 1) == 2;
  // Association monomial and the recovered Young tableau.
  const auto a = association_monomial(dominant_normal_form(t).second);
  pass = pass && to_string(a.monomial) == "S01^2 S12 S13^2 S24^2 S25 S45" &&
         monomial_tableau(a.monomial, weight(t)) == tab("0:0,0,0,1,1|0:1,1,2,3,3|0:2,4,4,5|0:3|0:5");
  return {pass, "M=" + to_string(a.monomial)};
}

Outcome pieri_consistency() {
  int checked = 0;
  int agree = 0;
  for (const auto& lambda : partitions_up_to(6)) {
    for (int r = 0; r <= 4; ++r) {
      ++checked;
      if (pieri_row(lambda, r) == schur_product(lambda, Partition{r})) ++agree;
    }
  }
  return {agree == checked, std::to_string(agree) + "/" + std::to_string(checked) + " cases"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 when the criterion has no time bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Schur expansion of s_(4,2,1)(3)", 1, schur_expansion},
      {2, "product benchmark (4,3,1)*(2,2,1)", 10, product_benchmark},
      {3, "vanishing coefficient c_(2,2),(2,2)^(4,2,1,1)", 0, vanishing_coefficient},
      {4, "word rewriting traces and normal form", 0, word_rewriting},
      {5, "crystal component of the example word", 60, crystal_component},
      {6, "commutation grid of slides and raisings", 0, figure_grid},
      {7, "Robinson pair golden case", 0, robinson_golden},
      {8, "oracle equivalence for |lambda|,|mu| <= 4, n = 4", 300, oracle_equivalence},
      {9, "confluence and involution property suite", 0, property_suite},
      {10, "bijection cardinality and Robinson round trips", 0, bijection_cardinality},
      {11, "switching, companion and association golden cases", 0, golden_cases},
      {12, "Pieri rule consistency", 0, pieri_consistency},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3f s", seconds);
    std::string timing = buffer;
    if (c.limit_seconds > 0) {
      timing += ", limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
      if (seconds > c.limit_seconds) {
        o.pass = false;
        o.detail += " (over time limit)";
      }
    }
    std::printf("[%s] %2d %s: %s (%s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), timing.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
