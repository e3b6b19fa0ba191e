// Acceptance run: one PASS/FAIL line per criterion, with the pinned size
// bounds and wall-clock budgets. Exit status is nonzero if any line fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "cfgcalc/algebra/expression.hpp"
#include "cfgcalc/classical/verify.hpp"
#include "cfgcalc/gamma/gamma.hpp"
#include "cfgcalc/grammar/catalog.hpp"
#include "cfgcalc/grammar/identity.hpp"
#include "cfgcalc/numbers/triangles.hpp"
#include "cfgcalc/oracles/enumerate.hpp"
#include "cfgcalc/quadext/verify.hpp"
#include "cfgcalc/suite/identities.hpp"
#include "support/properties.hpp"

namespace {

using namespace cfgcalc;
using algebra::BigInt;

struct Criterion {
  std::string id;
  std::string title;
  std::string bound;  // size bound and tolerance, printed as-is
  double budget_s;    // 0 means no runtime bound
  std::function<std::string()> run;
};

std::string first_failure(const VerificationReport& r) {
  for (const auto& c : r.checks())
    if (!c.passed) return r.name() + " " + c.label + " n=" + std::to_string(c.n) + ": " + c.detail;
  return {};
}

std::string require_all(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (r.checks().empty()) return r.name() + ": no checks ran";
    if (auto f = first_failure(r); !f.empty()) return f;
  }
  return {};
}

std::string row_mismatch(const std::string& what, long n, const std::vector<BigInt>& got,
                         const std::vector<BigInt>& want) {
  if (got == want) return {};
  return what + " differs at n=" + std::to_string(n);
}

std::vector<BigInt> row_of(BigInt (*f)(long, long), long n, long max_k) {
  std::vector<BigInt> out;
  for (long k = 0; k <= max_k; ++k) out.push_back(f(n, k));
  return out;
}

std::vector<BigInt> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

// AC1: a_n, b_n for n = 1..4 against the printed lists.
std::string gamma_tables() {
  const std::vector<std::vector<BigInt>> a{ints({1}), ints({1}), ints({1, 2}), ints({1, 8})};
  const std::vector<std::vector<BigInt>> b{ints({1}), ints({1, 4}), ints({1, 20}),
                                           ints({1, 72, 80})};
  for (long n = 1; n <= 4; ++n) {
    const auto& ta = numbers::find_triangle("gamma-a").triangle;
    const auto& tb = numbers::find_triangle("gamma-b").triangle;
    if (auto e = row_mismatch("a_n", n, ta.row(n), a[static_cast<std::size_t>(n - 1)]); !e.empty())
      return e;
    if (auto e = row_mismatch("b_n", n, tb.row(n), b[static_cast<std::size_t>(n - 1)]); !e.empty())
      return e;
  }
  return {};
}

// AC2: the four secant-tangent identities, read against the recurrence backends.
std::string secant_tangent() {
  auto ids = suite::secant_tangent_identities();
  if (ids.size() != 4) return "expected four identities";
  ids[2].coefficient = numbers::central_H_recurrence;
  ids[3].coefficient = numbers::motzkin_F_recurrence;
  std::vector<VerificationReport> reports;
  for (const auto& id : ids) reports.push_back(grammar::verify_identity(id, 25));
  return require_all(reports);
}

// AC3
std::string eulerian() {
  std::vector<VerificationReport> reports;
  for (const auto& id : suite::eulerian_identities())
    reports.push_back(grammar::verify_identity(id, 15));
  return require_all(reports);
}

// AC4
std::string oracle_certification() {
  for (long n = 1; n <= 8; ++n)
    if (auto e = row_mismatch("Eulerian A", n, oracles::descent_distribution(n),
                              row_of(numbers::eulerian_a, n, n - 1));
        !e.empty())
      return e;
  for (long n = 1; n <= 6; ++n)
    if (auto e = row_mismatch("Eulerian B", n, oracles::descent_b_distribution(n),
                              row_of(numbers::eulerian_b, n, n));
        !e.empty())
      return e;
  for (long n = 1; n <= 12; ++n)
    for (long k = 0; k <= n; ++k)
      if (oracles::motzkin_with_up_steps(n - 1, k) != numbers::motzkin_F(n, k))
        return "F differs at n=" + std::to_string(n) + " k=" + std::to_string(k);
  for (long n = 1; n <= 14; ++n)
    for (long k = 0; k <= n; ++k)
      if (oracles::left_factors_with_H(n, k) != numbers::motzkin_T(n, k))
        return "T differs at n=" + std::to_string(n) + " k=" + std::to_string(k);
  return {};
}

// AC5
std::string gamma_expansions() {
  using gamma::Family;
  const auto from = [](BigInt (*f)(long, long), long n, long d) {
    return gamma::GammaVector(row_of(f, n, d / 2), d);
  };
  for (long n = 1; n <= 12; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    const struct {
      gamma::GammaVector g;
      gamma::HPoly h;
      const char* name;
    } cases[] = {
        {from(numbers::gamma_a, n, n - 1), gamma::coxeter_h(Family::A, n), "Coxeter A"},
        {from(numbers::gamma_b, n, n), gamma::coxeter_h(Family::B, n), "Coxeter B"},
        {from(numbers::motzkin_F, n, n - 1), gamma::associahedron_h(Family::A, n), "associahedron A"},
        {from(numbers::central_H, n, n), gamma::associahedron_h(Family::B, n), "associahedron B"},
    };
    for (const auto& c : cases) {
      if (gamma::gamma_to_h(c.g) != c.h) return std::string(c.name) + " expansion" + at;
      if (gamma::h_to_gamma(c.h) != c.g) return std::string(c.name) + " round trip" + at;
      for (const auto& v : c.g.gammas)
        if (v < 0) return std::string(c.name) + " negative gamma" + at;
    }
  }
  return {};
}

// AC6
std::string binomial_identities() {
  const auto g2 = grammar::associahedron_grammar();
  const auto gm = grammar::motzkin_grammar();
  const auto d = grammar::OperatorExpr::derivative();
  using algebra::parse_poly;
  if (grammar::iterate_operator(g2, d, parse_poly("u*v", g2.alphabet()), 1) !=
      parse_poly("u^2*v^2 + 4*u^4", g2.alphabet()))
    return "D(uv) anchor";
  if (grammar::iterate_operator(gm, d, parse_poly("t^2*u^2", gm.alphabet()), 1) !=
      parse_poly("2*t^2*(u^4 + u^3*v)", gm.alphabet()))
    return "D(t^2 u^2) anchor";

  std::vector<grammar::GrammarIdentity> ids{suite::associahedron_uv_identity(),
                                            suite::gamma_a_shifted_identity()};
  for (auto& id : suite::chebyshev_coefficient_identities()) ids.push_back(id);
  for (auto& id : suite::motzkin_identities()) ids.push_back(id);
  std::vector<VerificationReport> reports;
  for (const auto& id : ids) reports.push_back(grammar::verify_identity(id, 15));
  return require_all(reports);
}

// AC7
std::string extension_identities() {
  return require_all({quadext::verify_thm31(12), quadext::verify_cor33(10),
                      quadext::verify_thm42_special(12)});
}

// AC8
std::string egf_checks() {
  if (oracles::count_alternating(4, oracles::PermType::A) != 5) return "E_4 != 5";
  return require_all({classical::verify_egf(12), classical::verify_alternating_egf(8, 6)});
}

std::pair<int, std::string> run_cli(const std::string& args) {
  const std::string cmd = std::string("'") + CFGCALC_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

// AC9
std::string determinism() {
  const auto a = run_cli("verify --target all --format json");
  const auto b = run_cli("verify --target all --format json");
  if (a.first != 0 || b.first != 0) return "verify exited with " + std::to_string(a.first);
  if (a.second.empty()) return "no output";
  if (a.second != b.second) return "outputs differ";
  return {};
}

// AC10
long g_property_cases = 0;

std::string property_suites() {
  testing::Rng rng(testing::kSeed);
  constexpr long kCases = 1000;
  for (const auto& p : testing::all_properties()) {
    if (auto f = testing::run_property(p, rng, kCases); !f.empty()) return p.name + " " + f;
    g_property_cases += kCases;
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "gamma-polynomial tables a_n, b_n for n=1..4", "exact", 0.1, gamma_tables},
      {"AC2", "secant-tangent grammar identities vs a, b, F, H recurrences", "n<=25, exact", 10,
       secant_tangent},
      {"AC3", "(Dy)^n(y), (Dy)^n(z) vs Eulerian A and B", "n<=15, exact", 5, eulerian},
      {"AC4", "Eulerian A/B, F, T certified by enumeration",
       "A n<=8, B n<=6, F n<=12, T n<=14, exact", 30, oracle_certification},
      {"AC5", "gamma expansions of Coxeter and associahedron h-polynomials", "n<=12, exact", 1,
       gamma_expansions},
      {"AC6", "G2, Chebyshev, shifted-a and Motzkin identities with n=1 anchors",
       "n<=15, exact", 5, binomial_identities},
      {"AC7", "quadratic-extension identities", "a/b n<=12, L/N n<=10, T/U n<=12, exact", 5,
       extension_identities},
      {"AC8", "EGF closed forms and alternating permutations",
       "order 12, E_n n<=8, E_n^B n<=6, exact", 10, egf_checks},
      {"AC9", "verify --target all --format json is byte-identical across runs", "exact", 0,
       determinism},
      {"AC10", "randomized property suites", ">=1000 cases each, fixed seed", 0, property_suites},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      error = c.run();
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && c.budget_s > 0 && secs >= c.budget_s)
      error = "over the " + std::to_string(c.budget_s) + " s budget";
    const bool ok = error.empty();
    failures += ok ? 0 : 1;

    char timing[96];
    if (c.budget_s > 0)
      std::snprintf(timing, sizeof timing, "%.3f s, budget %g s", secs, c.budget_s);
    else
      std::snprintf(timing, sizeof timing, "%.3f s", secs);
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << " (" << c.bound;
    if (c.id == "AC10") std::cout << ", " << g_property_cases << " cases total";
    std::cout << "; " << timing << ")";
    if (!ok) std::cout << ": " << error;
    std::cout << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
