// cfgcalc: grammar derivatives, gamma-vectors, integer triangles and the
// verification suite from the command line.
//
// Exit status: 0 success, 1 a verification failed, 2 usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cfgcalc/algebra/expression.hpp"
#include "cfgcalc/algebra/poly_json.hpp"
#include "cfgcalc/algebra/unipoly.hpp"
#include "cfgcalc/classical/polynomials.hpp"
#include "cfgcalc/gamma/gamma.hpp"
#include "cfgcalc/grammar/catalog.hpp"
#include "cfgcalc/grammar/config.hpp"
#include "cfgcalc/grammar/rule_parser.hpp"
#include "cfgcalc/numbers/triangles.hpp"
#include "cfgcalc/oracles/enumerate.hpp"
#include "cfgcalc/suite/targets.hpp"

namespace {

using namespace cfgcalc;
using algebra::BigInt;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

std::string join(const std::vector<BigInt>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += sep;
    s += v[i].get_str();
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct DeriveOptions {
  std::string grammar_text;
  std::string builtin;
  std::string config;
  std::string use;
  std::string start;
  std::string op = "D";
  long n = 0;
  std::string format = "text";
};

int run_derive(const DeriveOptions& o) {
  const int sources = !o.grammar_text.empty() + !o.builtin.empty() + !o.config.empty();
  if (sources != 1)
    throw std::invalid_argument("give exactly one of --grammar, --builtin or --config");
  std::optional<grammar::Grammar> g;
  if (!o.grammar_text.empty()) {
    g = grammar::parse_grammar(o.grammar_text);
  } else if (!o.builtin.empty()) {
    g = grammar::builtin_grammar(o.builtin);
  } else {
    if (o.use.empty()) throw std::invalid_argument("--config needs --use <name>");
    g = grammar::config_grammar(grammar::parse_grammar_config(read_file(o.config)), o.use);
  }
  const auto op = grammar::OperatorExpr::parse(o.op);
  const auto start = algebra::parse_poly(o.start, g->alphabet());
  const auto result = grammar::iterate_operator(*g, op, start, static_cast<std::size_t>(o.n));
  if (o.format == "json") {
    std::cout << json{{"grammar", grammar::to_string(*g)},
                      {"operator", grammar::to_string(op)},
                      {"start", algebra::to_string(start)},
                      {"n", o.n},
                      {"result", algebra::to_json(result)}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << algebra::to_string(result) << '\n';
  }
  return kOk;
}

struct GammaOptions {
  std::string family;
  long n = 1;
  std::string format = "text";
};

int run_gamma(const GammaOptions& o) {
  gamma::HPoly h;
  gamma::GammaVector predicted;
  if (o.family == "coxeter-a") {
    h = gamma::coxeter_h(gamma::Family::A, o.n);
    predicted = gamma::coxeter_gamma(gamma::Family::A, o.n);
  } else if (o.family == "coxeter-b") {
    h = gamma::coxeter_h(gamma::Family::B, o.n);
    predicted = gamma::coxeter_gamma(gamma::Family::B, o.n);
  } else if (o.family == "assoc-a") {
    h = gamma::associahedron_h(gamma::Family::A, o.n);
    predicted = gamma::associahedron_gamma(gamma::Family::A, o.n);
  } else {
    h = gamma::associahedron_h(gamma::Family::B, o.n);
    predicted = gamma::associahedron_gamma(gamma::Family::B, o.n);
  }
  const gamma::GammaVector g = gamma::h_to_gamma(h);
  const bool matches = g == predicted;
  if (o.format == "json") {
    std::cout << json{{"family", o.family},
                      {"n", o.n},
                      {"d", h.d},
                      {"h", algebra::to_json_array(h.coeffs)},
                      {"gamma", algebra::to_json_array(g.gammas)},
                      {"matches_triangle", matches}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "h: " << join(h.coeffs) << '\n' << "gamma: " << join(g.gammas) << '\n';
    if (!matches) std::cout << "triangle predicts: " << join(predicted.gammas) << '\n';
  }
  return matches ? kOk : kVerificationFailed;
}

struct VerifyOptions {
  std::string target;
  std::optional<long> n_max;
  std::string format = "text";
  bool serial = false;
};

int run_verify(const VerifyOptions& o) {
  std::vector<VerificationReport> reports;
  if (o.target == "all") {
    reports = suite::run_all(o.n_max, !o.serial);
  } else {
    reports.push_back(suite::run_target(suite::find_target(o.target), o.n_max));
  }
  if (o.format == "json") {
    std::cout << suite::to_json(reports).dump(2) << '\n';
  } else {
    for (const auto& r : reports) std::cout << to_text(r);
    std::cout << (suite::all_passed(reports) ? "PASS" : "FAIL") << '\n';
  }
  return suite::all_passed(reports) ? kOk : kVerificationFailed;
}

struct TableOptions {
  std::string name;
  long rows = 1;
  std::string format = "text";
  long offset = 0;
};

int run_table(const TableOptions& o) {
  const auto& t = numbers::find_triangle(o.name);
  if (o.format == "json")
    std::cout << numbers::to_json(t.triangle, o.rows).dump(2) << '\n';
  else if (o.format == "bfile")
    std::cout << numbers::to_bfile(t, o.rows, o.offset);
  else
    std::cout << numbers::to_text(t.triangle, o.rows);
  return kOk;
}

struct OracleOptions {
  std::string kind;
  long n = 1;
  std::string format = "text";
};

int run_oracle(const OracleOptions& o) {
  std::vector<BigInt> values;
  if (o.kind == "descents") {
    values = oracles::descent_distribution(o.n);
  } else if (o.kind == "descents-b") {
    values = oracles::descent_b_distribution(o.n);
  } else if (o.kind == "alternating-a") {
    values = {oracles::count_alternating(o.n, oracles::PermType::A)};
  } else if (o.kind == "alternating-b") {
    values = {oracles::count_alternating(o.n, oracles::PermType::B)};
  } else if (o.kind == "motzkin") {
    for (long k = 0; 2 * k <= o.n; ++k) values.push_back(oracles::motzkin_with_up_steps(o.n, k));
  } else {
    for (long k = 0; k <= o.n; ++k) values.push_back(oracles::left_factors_with_H(o.n, k));
  }
  if (o.format == "json")
    std::cout << json{{"kind", o.kind}, {"n", o.n}, {"values", algebra::to_json_array(values)}}.dump(2)
              << '\n';
  else
    std::cout << join(values, " ") << '\n';
  return kOk;
}

struct ClassicalOptions {
  std::string family = "all";
  long n = 0;
  std::string format = "text";
};

int run_classical(const ClassicalOptions& o) {
  struct Entry {
    std::string name;
    const char* var;
    algebra::UniPoly (*make)(long);
  };
  const std::vector<Entry> all = {
      {"P", "u", classical::derivative_poly_P}, {"Q", "u", classical::derivative_poly_Q},
      {"L", "x", classical::legendre_like_L},   {"N", "x", classical::narayana_like_N},
      {"T", "x", classical::chebyshev_T},       {"U", "x", classical::chebyshev_U},
  };
  json j = json::object();
  for (const auto& e : all) {
    if (o.family != "all" && o.family != e.name) continue;
    if ((e.name == "L" || e.name == "N") && o.n < 1) {
      if (o.family != "all") throw std::invalid_argument(e.name + "_n needs n >= 1");
      continue;
    }
    const auto p = e.make(o.n);
    if (o.format == "json") {
      j[e.name] = {{"var", e.var}, {"coeffs", algebra::to_json_array(p.coeffs())}};
    } else if (o.family == "all") {
      std::cout << e.name << "_" << o.n << "(" << e.var << ") = " << algebra::to_string(p, e.var)
                << '\n';
    } else {
      std::cout << algebra::to_string(p, e.var) << '\n';
    }
  }
  if (o.format == "json") std::cout << json{{"n", o.n}, {"polynomials", j}}.dump(2) << '\n';
  return kOk;
}

int run_list() {
  std::cout << "verification targets:\n";
  for (const auto& t : suite::targets())
    std::cout << "  " << t.name << " (default n-max " << t.default_n_max << ", max " << t.max_n
              << "): " << t.description << '\n';
  std::cout << "triangles:\n";
  for (const auto& t : numbers::triangle_registry()) {
    std::cout << "  " << t.name;
    for (const auto& a : t.aliases) std::cout << " " << a;
    std::cout << ": " << t.description << '\n';
  }
  std::cout << "built-in grammars:\n";
  for (const auto& g : grammar::builtin_grammars())
    std::cout << "  " << g.name << ": " << g.rules << '\n';
  return kOk;
}

std::vector<std::string> triangle_names() {
  std::vector<std::string> names;
  for (const auto& t : numbers::triangle_registry()) {
    names.push_back(t.name);
    names.insert(names.end(), t.aliases.begin(), t.aliases.end());
  }
  return names;
}

std::vector<std::string> target_names() {
  std::vector<std::string> names{"all"};
  for (const auto& t : suite::targets()) names.push_back(t.name);
  return names;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact grammar calculus, gamma-vectors and combinatorial identity checks"};
  app.require_subcommand(1);

  DeriveOptions derive;
  auto* d = app.add_subcommand("derive", "Iterate D, preD:w (p -> D(w p)) or postD:w (p -> w D(p))");
  d->add_option("--grammar", derive.grammar_text, "Rules, e.g. \"u -> u*v; v -> v\"");
  d->add_option("--builtin", derive.builtin, "Name of a built-in grammar (see `list`)");
  d->add_option("--config", derive.config, "Grammar config file with [name] sections")
      ->check(CLI::ExistingFile);
  d->add_option("--use", derive.use, "Section of --config to use");
  d->add_option("--start", derive.start, "Start polynomial over the grammar letters")->required();
  d->add_option("--op", derive.op, "D | preD:<letter> | postD:<letter>")->capture_default_str();
  d->add_option("--n", derive.n, "Number of applications")->required()->check(CLI::Range(0L, 200L));
  d->add_option("--format", derive.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  GammaOptions gam;
  auto* g = app.add_subcommand("gamma", "h-polynomial and gamma-vector of a family member");
  g->add_option("--family", gam.family)
      ->required()
      ->check(CLI::IsMember({"coxeter-a", "coxeter-b", "assoc-a", "assoc-b"}));
  g->add_option("--n", gam.n)->required()->check(CLI::Range(1L, 200L));
  g->add_option("--format", gam.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Run a verification target (exit 0 iff all checks pass)");
  v->add_option("--target", ver.target)->required()->check(CLI::IsMember(target_names()));
  v->add_option("--n-max", ver.n_max, "Largest n checked (default per target, see `list`)");
  v->add_option("--format", ver.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  v->add_flag("--serial", ver.serial, "Run targets one after another");

  TableOptions tab;
  auto* t = app.add_subcommand("table", "Print rows of an integer triangle");
  t->add_option("--name", tab.name, "Triangle name or OEIS id")->required()->check(CLI::IsMember(triangle_names()));
  t->add_option("--rows", tab.rows)->required()->check(CLI::Range(1L, 500L));
  t->add_option("--format", tab.format)
      ->check(CLI::IsMember({"text", "json", "bfile"}))
      ->capture_default_str();
  t->add_option("--offset", tab.offset, "First b-file index")->capture_default_str();

  OracleOptions orc;
  auto* o = app.add_subcommand("oracle", "Exhaustive enumeration counts");
  o->add_option("--kind", orc.kind)
      ->required()
      ->check(CLI::IsMember(
          {"descents", "descents-b", "alternating-a", "alternating-b", "motzkin", "left-factors"}));
  o->add_option("--n", orc.n, "Permutation size or path length")->required();
  o->add_option("--format", orc.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  ClassicalOptions cls;
  auto* c = app.add_subcommand("classical", "Derivative, Legendre-type and Chebyshev polynomials");
  c->add_option("--family", cls.family)
      ->check(CLI::IsMember({"all", "P", "Q", "L", "N", "T", "U"}))
      ->capture_default_str();
  c->add_option("--n", cls.n)->required()->check(CLI::Range(0L, 500L));
  c->add_option("--format", cls.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  app.add_subcommand("list", "List verification targets, triangles and built-in grammars");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*d) return run_derive(derive);
    if (*g) return run_gamma(gam);
    if (*v) return run_verify(ver);
    if (*t) return run_table(tab);
    if (*o) return run_oracle(orc);
    if (*c) return run_classical(cls);
    return run_list();
  } catch (const algebra::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kUsageError;
}
