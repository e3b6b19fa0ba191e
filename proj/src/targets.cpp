#include "cfgcalc/suite/targets.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "cfgcalc/classical/verify.hpp"
#include "cfgcalc/gamma/gamma.hpp"
#include "cfgcalc/numbers/triangles.hpp"
#include "cfgcalc/oracles/enumerate.hpp"
#include "cfgcalc/quadext/verify.hpp"
#include "cfgcalc/suite/identities.hpp"

namespace cfgcalc::suite {

namespace {

using algebra::BigInt;

VerificationReport run_identities(const std::string& name,
                                  const std::vector<GrammarIdentity>& ids, long n_max,
                                  long n_min = 1) {
  VerificationReport report(name);
  for (const auto& id : ids) report.append(grammar::verify_identity(id, n_max, n_min));
  return report;
}

std::string join(const std::vector<BigInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s;
}

// Compares an enumerated row with a triangle row.
void certify_row(VerificationReport& report, const std::string& label, long n,
                 const std::vector<BigInt>& enumerated, const std::vector<BigInt>& formula) {
  if (enumerated == formula)
    report.pass(label, n, join(enumerated));
  else
    report.fail(label, n, "enumerated " + join(enumerated) + " vs " + join(formula));
}

std::vector<BigInt> row_of(BigInt (*entry)(long, long), long n, long max_k) {
  std::vector<BigInt> r;
  for (long k = 0; k <= max_k; ++k) r.push_back(entry(n, k));
  return r;
}

VerificationReport eulerian_target(long n_max) {
  VerificationReport report = run_identities("thm11", eulerian_identities(), n_max);
  for (long n = 1; n <= std::min(n_max, 8L); ++n)
    certify_row(report, "Eulerian A(n,k) = descents over S_n", n, oracles::descent_distribution(n),
                row_of(numbers::eulerian_a, n, n - 1));
  for (long n = 1; n <= std::min(n_max, 6L); ++n)
    certify_row(report, "Eulerian B(n,k) = type-B descents over B_n", n,
                oracles::descent_b_distribution(n), row_of(numbers::eulerian_b, n, n));
  return report;
}

VerificationReport secant_tangent_target(long n_max) {
  VerificationReport report = run_identities("thm32", secant_tangent_identities(), n_max);
  for (long n = 1; n <= std::min(n_max, 12L); ++n) {
    std::vector<BigInt> paths;
    for (long k = 0; k <= (n - 1) / 2; ++k) paths.push_back(oracles::motzkin_with_up_steps(n - 1, k));
    certify_row(report, "F(n,k) = Motzkin paths of length n-1 with k up steps", n, paths,
                row_of(numbers::motzkin_F, n, (n - 1) / 2));
  }
  return report;
}

VerificationReport motzkin_target(long n_max) {
  VerificationReport report = run_identities("thm44", motzkin_identities(), n_max);
  for (long n = 1; n <= std::min(n_max, 14L); ++n) {
    std::vector<BigInt> paths;
    for (long k = 0; k <= n; ++k) paths.push_back(oracles::left_factors_with_H(n, k));
    certify_row(report, "T(n,k) = Motzkin left factors of length n with k H steps", n, paths,
                row_of(numbers::motzkin_T, n, n));
  }
  return report;
}

std::string show(const std::vector<BigInt>& v) { return "[" + join(v) + "]"; }

// gamma expansion of `h` against the predicted gamma row, both directions.
void check_gamma(VerificationReport& report, const std::string& label, long n,
                 const gamma::HPoly& h, const gamma::GammaVector& g) {
  const gamma::HPoly expanded = gamma::gamma_to_h(g);
  if (!(expanded == h)) {
    report.fail(label, n, "gamma " + show(g.gammas) + " expands to " + show(expanded.coeffs) +
                              ", h is " + show(h.coeffs));
    return;
  }
  try {
    const gamma::GammaVector back = gamma::h_to_gamma(h);
    const bool nonneg = std::all_of(back.gammas.begin(), back.gammas.end(),
                                    [](const BigInt& v) { return v >= 0; });
    if (!(back == g))
      report.fail(label, n, "h_to_gamma gives " + show(back.gammas));
    else if (!nonneg)
      report.fail(label, n, "negative gamma entry in " + show(back.gammas));
    else
      report.pass(label, n, "h " + show(h.coeffs) + " gamma " + show(g.gammas));
  } catch (const std::exception& e) {
    report.fail(label, n, e.what());
  }
}

VerificationReport gamma_target(const std::string& name, gamma::Family type, long n_max) {
  VerificationReport report(name);
  const bool a = type == gamma::Family::A;
  for (long n = 1; n <= n_max; ++n) {
    check_gamma(report, a ? "Eulerian A_n(x) in gamma basis a(n,k)" : "Eulerian B_n(x) in gamma basis b(n,k)",
                n, gamma::coxeter_h(type, n), gamma::coxeter_gamma(type, n));
    check_gamma(report,
                a ? "Narayana h-polynomial in gamma basis C_k C(n-1,2k)"
                  : "sum C(n,k)^2 x^k in gamma basis C(2k,k) C(n,2k)",
                n, gamma::associahedron_h(type, n), gamma::associahedron_gamma(type, n));
  }
  return report;
}

VerificationReport renamed(VerificationReport r, const std::string& name) {
  VerificationReport out(name);
  out.append(r);
  return out;
}

std::vector<Target> build_targets() {
  std::vector<Target> t = {
      {"alternating", "alternating permutations of S_n and B_n vs tan + sec coefficients", 8,
       oracles::kMaxPermutationSize,
       [](long n) {
         return renamed(classical::verify_alternating_egf(
                            n, std::min(n, oracles::kMaxSignedPermutationSize)),
                        "alternating");
       }},
      {"cor33", "(fD)^n(f), (fD)^n(g) vs Legendre-type L_n and N_n at i*h", 10, 30,
       [](long n) { return renamed(quadext::verify_cor33(n), "cor33"); }},
      {"egf", "closed-form generating functions of P_n, Q_n vs the recurrences", 12, 24,
       [](long n) { return classical::verify_egf(n); }},
      {"prop12", "D^n(f), D^n(g) reduce to 2^n f Q_n(h) and 2^(n+1) P_n(h)", 12, 40,
       [](long n) { return classical::verify_prop12(n); }},
      {"prop41", "D^n(uv) under u -> u^2 v, v -> 4u^3", 15, 40,
       [](long n) { return run_identities("prop41", {associahedron_uv_identity()}, n); }},
      {"thm11", "(Dy)^n(y), (Dy)^n(z) vs Eulerian numbers of types A and B", 15, 30,
       eulerian_target},
      {"thm21", "type-A Eulerian and Narayana h-polynomials in the gamma basis", 12, 60,
       [](long n) { return gamma_target("thm21", gamma::Family::A, n); }},
      {"thm22", "type-B Eulerian and C(n,k)^2 h-polynomials in the gamma basis", 12, 60,
       [](long n) { return gamma_target("thm22", gamma::Family::B, n); }},
      {"thm31", "a_n(x), b_n(x) through P_n, Q_n at 1/sqrt(4x-1)", 12, 30,
       [](long n) { return renamed(quadext::verify_thm31(n), "thm31"); }},
      {"thm32", "D^n(f), D^n(g), (fD)^n(f), (fD)^n(g) vs b, a, H, F", 25, 40,
       secant_tangent_target},
      {"thm42", "u -> u^2 v, v -> u^3: binomial expansions and Chebyshev T, U", 15, 30,
       [](long n) {
         VerificationReport r = run_identities("thm42", chebyshev_coefficient_identities(), n);
         r.append(quadext::verify_thm42_special(n));
         return r;
       }},
      {"thm43", "D^n(u) under u -> uv, v -> 2u vs a(n+1,k)", 15, 40,
       [](long n) { return run_identities("thm43", {gamma_a_shifted_identity()}, n); }},
      {"thm44", "D^n(t^2 u^2), D^n(t^2 u) vs Motzkin left factors and cube f-vectors", 15, 30,
       motzkin_target},
  };
  std::sort(t.begin(), t.end(), [](const Target& a, const Target& b) { return a.name < b.name; });
  return t;
}

}  // namespace

const std::vector<Target>& targets() {
  static const std::vector<Target> all = build_targets();
  return all;
}

const Target& find_target(std::string_view name) {
  for (const auto& t : targets())
    if (t.name == name) return t;
  throw std::invalid_argument("unknown verification target '" + std::string(name) + "'");
}

VerificationReport run_target(const Target& target, std::optional<long> n_max) {
  const long n = n_max.value_or(target.default_n_max);
  if (n < 1 || n > target.max_n)
    throw std::out_of_range("target " + target.name + " accepts 1 <= n-max <= " +
                            std::to_string(target.max_n) + ", got " + std::to_string(n));
  return target.run(n);
}

std::vector<VerificationReport> run_all(std::optional<long> n_max, bool parallel) {
  const auto& all = targets();
  auto budget = [&](const Target& t) {
    return n_max ? std::min(*n_max, t.max_n) : t.default_n_max;
  };
  std::vector<VerificationReport> out;
  if (!parallel) {
    for (const auto& t : all) out.push_back(run_target(t, budget(t)));
    return out;
  }
  std::vector<std::future<VerificationReport>> jobs;
  for (const auto& t : all)
    jobs.push_back(std::async(std::launch::async, [&t, n = budget(t)] { return run_target(t, n); }));
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed(); });
}

nlohmann::json to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json targets_json = nlohmann::json::array();
  for (const auto& r : reports) targets_json.push_back(cfgcalc::to_json(r));
  return {{"passed", all_passed(reports)}, {"targets", std::move(targets_json)}};
}

}  // namespace cfgcalc::suite
