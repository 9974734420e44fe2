#pragma once

#include <array>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lrtab/lrtab.hpp"

namespace lrtab::cli {

enum ExitCode { kOk = 0, kFailure = 1, kParse = 2, kPrecondition = 3, kResource = 4 };

namespace detail {

using nlohmann::json;

struct Options {
  bool json = false;
  std::optional<int> n;
  std::vector<std::string> args;
  std::array<std::optional<std::string>, 3> coef;
  std::string weight;
  std::string policy = "min";
  std::string mode;
  std::optional<int> index;
  bool stats = false;
  std::size_t cap = kDefaultVertexCap;
  int k = 0;
};

inline int require_n(const Options& o) {
  if (!o.n) throw PreconditionError("--n is required");
  if (*o.n < 1) throw PreconditionError("--n must be positive");
  return *o.n;
}

inline void print_expansion(std::ostream& out, const Options& o, const SchurExpansion& e) {
  if (o.json) {
    out << to_json(e).dump() << '\n';
  } else {
    out << to_string(e) << '\n';
  }
}

inline void print_tableau(std::ostream& out, const Options& o, const SkewTableau& t, const char* key = "tableau") {
  if (o.json) {
    out << json{{key, to_string(t)}}.dump() << '\n';
  } else {
    out << to_string(t) << '\n';
  }
}

inline json trace_json(const RaisingTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) steps.push_back(std::string(1, s.kind) + "_" + std::to_string(s.index) + "@" + std::to_string(s.position));
  return steps;
}

inline TracePolicy parse_policy(const std::string& name) {
  if (name == "min") return TracePolicy::MinIndex;
  if (name == "max") return TracePolicy::MaxIndex;
  throw PreconditionError("policy must be min or max");
}

inline void run_mult(std::ostream& out, const Options& o) {
  auto e = schur_product(parse_partition(o.args.at(0)), parse_partition(o.args.at(1)));
  print_expansion(out, o, o.n ? e.truncated(*o.n) : e);
}

inline void run_skew(std::ostream& out, const Options& o) {
  print_expansion(out, o, skew_expand(parse_skew_shape(o.args.at(0)), o.n));
}

inline void run_coef(std::ostream& out, const Options& o) {
  const auto& a = o.coef;
  const Integer c = a[2] ? lr_coefficient(parse_partition(*a[0]), parse_partition(*a[1]), parse_partition(*a[2]))
                         : lr_coefficient(parse_skew_shape(*a[0]), parse_partition(*a[1]));
  if (o.json) {
    out << json{{"coefficient", integer_to_json(c)}}.dump() << '\n';
  } else {
    out << c << '\n';
  }
}

inline void run_lrtab(std::ostream& out, const Options& o) {
  const SkewShape chi = parse_skew_shape(o.args.at(0));
  std::optional<Partition> nu;
  if (!o.weight.empty()) nu = parse_partition(o.weight);
  json list = json::array();
  for_each_lr_tableau(chi, nu, o.n, [&](const SkewTableau& t) {
    if (o.json) {
      list.push_back(to_string(t));
    } else {
      out << to_string(t) << '\n';
    }
  });
  if (o.json) out << json{{"tableaux", list}}.dump() << '\n';
}

inline void run_rect(std::ostream& out, const Options& o) { print_tableau(out, o, rectify(parse_tableau(o.args.at(0))).tableau); }

inline void run_switch(std::ostream& out, const Options& o) {
  auto r = tableau_switch(parse_tableau(o.args.at(0)), parse_tableau(o.args.at(1)));
  if (o.json) {
    out << json{{"inner", to_string(r.inner)}, {"outer", to_string(r.outer)}}.dump() << '\n';
  } else {
    out << to_string(r.inner) << '\n' << to_string(r.outer) << '\n';
  }
}

inline void run_rob(std::ostream& out, const Options& o) {
  auto r = rob(parse_tableau(o.args.at(0)));
  if (o.json) {
    out << json{{"lr", to_string(r.l)}, {"rectified", to_string(r.p)}}.dump() << '\n';
  } else {
    out << to_string(r.l) << '\n' << to_string(r.p) << '\n';
  }
}

inline void run_unrob(std::ostream& out, const Options& o) {
  print_tableau(out, o, rob_inverse(parse_tableau(o.args.at(0)), parse_tableau(o.args.at(1))));
}

inline void check_alphabet(const Word& w, int n) {
  for (int letter : w) {
    if (letter >= n) throw PreconditionError("letter " + std::to_string(letter) + " is outside the alphabet of size " + std::to_string(n));
  }
}

inline void run_word(std::ostream& out, const Options& o) {
  const int n = require_n(o);
  const Word w = parse_word(o.args.at(0));
  check_alphabet(w, n);
  if (o.mode == "nf") {
    auto [nf, trace] = dominant_normal_form(w, parse_policy(o.policy));
    if (o.json) {
      out << json{{"word", word_to_string(nf)}, {"trace", trace_json(trace)}}.dump() << '\n';
    } else {
      out << word_to_string(nf) << '\n' << trace_to_string(trace) << '\n';
    }
    return;
  }
  if (!o.index) throw PreconditionError("--index is required for raise and lower");
  const int i = *o.index;
  if (i < 0 || i + 1 >= n) throw PreconditionError("index must lie in 0..n-2");
  const bool up = o.mode == "raise";
  const auto pos = up ? raise_position(w, i) : lower_position(w, i);
  Word result = w;
  if (pos) result[*pos] += up ? -1 : 1;
  if (o.json) {
    json j = {{"defined", pos.has_value()}};
    if (pos) {
      j["word"] = word_to_string(result);
      j["position"] = *pos;
    }
    out << j.dump() << '\n';
  } else {
    out << (pos ? word_to_string(result) : std::string("undefined")) << '\n';
  }
}

inline void run_crystal(std::ostream& out, const Options& o) {
  const int n = require_n(o);
  const Word w = parse_word(o.args.at(0));
  const auto c = coplactic_component(w, n, o.cap);
  if (o.stats) {
    if (o.json) {
      out << json{{"vertices", c.vertices.size()}, {"edges", c.edges.size()}, {"same_weight", c.same_weight_as_root()}}.dump() << '\n';
    } else {
      out << "vertices=" << c.vertices.size() << " same_weight=" << c.same_weight_as_root() << '\n';
    }
    return;
  }
  if (o.json) {
    json vertices = json::array();
    for (const auto& v : c.vertices) vertices.push_back(word_to_string(v));
    json edges = json::array();
    for (const auto& e : c.edges) edges.push_back({e.from, e.to, e.label});
    json weights = json::array();
    for (const auto& [wt, count] : c.weight_counts) weights.push_back({{"weight", wt}, {"count", count}});
    out << json{{"vertices", vertices}, {"edges", edges}, {"weights", weights}}.dump() << '\n';
  } else {
    for (const auto& v : c.vertices) out << word_to_string(v) << '\n';
  }
}

inline void run_kostka(std::ostream& out, const Options& o) {
  const Partition lambda = parse_partition(o.args.at(0));
  const Partition mu = parse_partition(o.args.at(1));
  const Integer k = kostka(lambda, mu.parts());
  if (o.json) {
    out << json{{"kostka", integer_to_json(k)}}.dump() << '\n';
  } else {
    out << k << '\n';
  }
}

/// Runs the tableau pipeline and the monomial oracle on s_lambda * s_mu in n variables.
inline bool run_oracle(std::ostream& out, const Options& o) {
  const int n = require_n(o);
  const Partition lambda = parse_partition(o.args.at(0));
  const Partition mu = parse_partition(o.args.at(1));
  const SchurExpansion lr = schur_product(lambda, mu).truncated(n);
  const SchurExpansion oracle = to_schur_basis(multiply(schur_monomials(lambda, n), schur_monomials(mu, n)));
  const bool agree = lr == oracle;
  if (o.json) {
    out << json{{"agree", agree}, {"lr", to_json(lr)["expansion"]}, {"oracle", to_json(oracle)["expansion"]}}.dump() << '\n';
  } else if (agree) {
    out << "AGREE: " << to_string(lr) << '\n';
  } else {
    out << "DISAGREE: lr=" << to_string(lr) << " oracle=" << to_string(oracle) << '\n';
  }
  return agree;
}

inline void run_bk(std::ostream& out, const Options& o) { print_tableau(out, o, bender_knuth(parse_tableau(o.args.at(0)), o.k)); }

inline void run_companion(std::ostream& out, const Options& o) {
  print_tableau(out, o, companion(parse_tableau(o.args.at(0)), parse_partition(o.args.at(1))));
}

inline void run_dual(std::ostream& out, const Options& o) {
  const bool eq = dual_equivalent(parse_tableau(o.args.at(0)), parse_tableau(o.args.at(1)));
  if (o.json) {
    out << json{{"dual_equivalent", eq}}.dump() << '\n';
  } else {
    out << (eq ? "true" : "false") << '\n';
  }
}

}  // namespace detail

/// Parses `args` (without the program name), runs the subcommand and returns
/// the exit status. Errors go to `err` as `error: <category>: <message>`.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options o;
  CLI::App app{"Littlewood-Richardson coefficients and tableau combinatorics", "lrtool"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit JSON");
  std::function<int()> action;

  auto positional = [&](CLI::App* sub, const std::string& name, int count, const std::string& help) {
    // Values such as `[4,2,1]` must reach the parsers verbatim.
    sub->add_option(name, o.args, help)->required()->expected(count)->allow_extra_args(false);
  };
  auto simple = [&](const std::string& name, const std::string& help, auto run) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&o, &out, &action, run] {
      action = [&o, &out, run] {
        run(out, o);
        return static_cast<int>(kOk);
      };
    });
    return sub;
  };

  auto* mult = simple("mult", "Schur expansion of s_lambda * s_mu", detail::run_mult);
  positional(mult, "partitions", 2, "lambda mu");
  mult->add_option("--n", o.n, "Keep partitions with at most N parts");

  auto* skew = simple("skew", "Schur expansion of a skew Schur function", detail::run_skew);
  positional(skew, "shape", 1, "skew shape");
  skew->add_option("--n", o.n, "Keep partitions with at most N parts");

  auto* coef = simple("coef", "A single Littlewood-Richardson coefficient", detail::run_coef);
  coef->add_option("first", o.coef[0], "skew shape, or lambda")->required();
  coef->add_option("second", o.coef[1], "nu, or mu")->required();
  coef->add_option("third", o.coef[2], "nu when the first two are lambda and mu");

  auto* lrtab = simple("lrtab", "List Littlewood-Richardson tableaux", detail::run_lrtab);
  positional(lrtab, "shape", 1, "skew shape");
  lrtab->add_option("--weight", o.weight, "Only tableaux of this weight");
  lrtab->add_option("--n", o.n, "Letters below N");

  positional(simple("rect", "Rectify by jeu de taquin", detail::run_rect), "tableau", 1, "tableau");
  positional(simple("switch", "Tableau switching X(S, T)", detail::run_switch), "tableaux", 2, "S T");
  positional(simple("rob", "Robinson pair (LR tableau, rectification)", detail::run_rob), "tableau", 1, "tableau");
  positional(simple("unrob", "Inverse of rob", detail::run_unrob), "tableaux", 2, "L P");

  auto* word = simple("word", "Coplactic operations on a word", detail::run_word);
  word->add_option("mode", o.mode, "raise | lower | nf")->required()->check(CLI::IsMember({"raise", "lower", "nf"}));
  positional(word, "word", 1, "space-separated letters");
  word->add_option("--n", o.n, "Alphabet size")->required();
  word->add_option("--policy", o.policy, "min | max")->check(CLI::IsMember({"min", "max"}));
  word->add_option("-i,--index", o.index, "Operator index for raise and lower");

  auto* crystal = simple("crystal", "Coplactic component of a word", detail::run_crystal);
  positional(crystal, "word", 1, "space-separated letters");
  crystal->add_option("--n", o.n, "Alphabet size")->required();
  crystal->add_flag("--stats", o.stats, "Only print vertex counts");
  crystal->add_option("--cap", o.cap, "Vertex cap");

  positional(simple("kostka", "Kostka number K_{lambda,mu}", detail::run_kostka), "partitions", 2, "lambda mu");

  auto* oracle = app.add_subcommand("oracle", "Compare the tableau and monomial computations of s_lambda * s_mu");
  positional(oracle, "partitions", 2, "lambda mu");
  oracle->add_option("--n", o.n, "Number of variables")->required();
  oracle->callback([&] {
    action = [&] { return detail::run_oracle(out, o) ? static_cast<int>(kOk) : static_cast<int>(kFailure); };
  });

  auto* bk = simple("bk", "Bender-Knuth involution", detail::run_bk);
  positional(bk, "tableau", 1, "tableau");
  bk->add_option("k", o.k, "letter index")->required();

  positional(simple("companion", "Companion tableau over kappa", detail::run_companion), "args", 2, "T kappa");
  positional(simple("dual", "Dual equivalence test", detail::run_dual), "tableaux", 2, "S1 S2");

  std::vector<const char*> argv{"lrtool"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kParse;
  }
  try {
    return action ? action() : static_cast<int>(kOk);
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    err << "error: precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ResourceError& e) {
    err << "error: resource: " << e.what() << '\n';
    return kResource;
  }
}

}  // namespace lrtab::cli
