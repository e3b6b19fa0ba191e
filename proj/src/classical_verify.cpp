#include "cfgcalc/classical/verify.hpp"

#include <algorithm>
#include <string>

#include "cfgcalc/algebra/expression.hpp"
#include "cfgcalc/algebra/unipoly.hpp"
#include "cfgcalc/classical/polynomials.hpp"
#include "cfgcalc/classical/series.hpp"
#include "cfgcalc/grammar/catalog.hpp"
#include "cfgcalc/oracles/enumerate.hpp"

namespace cfgcalc::classical {

using algebra::Alphabet;
using algebra::BigInt;
using algebra::MultiPoly;
using algebra::UniPoly;

namespace {

std::string show(const UniPoly& p, const char* var) { return algebra::to_string(p, var); }

// Reduces p(f, g) by g = 2h, f^2 = 1 + h^2 and checks the leftover parity of f.
void check_reduction(VerificationReport& report, const std::string& label, long n,
                     const MultiPoly& p, int want_parity, const UniPoly& want) {
  const Alphabet h{"h"};
  const MultiPoly two_h = algebra::parse_poly("2*h", h);
  const MultiPoly one_plus_h2 = algebra::parse_poly("1 + h^2", h);
  try {
    const auto reduced = algebra::substitute_square_with_parity(
        algebra::substitute(p, "g", two_h), "f", one_plus_h2);
    if (reduced.parity != want_parity) {
      report.fail(label, n, "leftover f-parity " + std::to_string(reduced.parity) +
                                ", expected " + std::to_string(want_parity));
      return;
    }
    const UniPoly got = algebra::to_unipoly(reduced.reduced, "h");
    if (got == want)
      report.pass(label, n);
    else
      report.fail(label, n, "got " + show(got, "h") + ", expected " + show(want, "h"));
  } catch (const std::exception& e) {
    report.fail(label, n, e.what());
  }
}

}  // namespace

VerificationReport verify_prop12(long n_max) {
  VerificationReport report("prop12");
  const auto g = grammar::secant_tangent_grammar();
  grammar::OperatorOrbit df(g, grammar::OperatorExpr::derivative(), MultiPoly::letter(g.alphabet(), "f"));
  grammar::OperatorOrbit dg(g, grammar::OperatorExpr::derivative(), MultiPoly::letter(g.alphabet(), "g"));
  for (long n = 0; n <= n_max; ++n) {
    const auto un = static_cast<unsigned long>(n);
    check_reduction(report, "D^n(f) = 2^n f Q_n(h)", n, df[un], 1,
                    derivative_poly_Q(n) * algebra::pow2(un));
    check_reduction(report, "D^n(g) = 2^(n+1) P_n(h)", n, dg[un], 0,
                    derivative_poly_P(n) * algebra::pow2(un + 1));
  }
  return report;
}

namespace {

void check_egf_coefficient(VerificationReport& report, const std::string& label, long n,
                           const PolySeries& series, const UniPoly& want) {
  const auto scaled = series[static_cast<std::size_t>(n)] *
                      Rational(algebra::factorial(static_cast<unsigned long>(n)));
  const auto integral = algebra::to_integral(scaled);
  if (!integral) {
    report.fail(label, n, "non-integral coefficient after scaling by n!");
  } else if (*integral != want) {
    report.fail(label, n, "series gives " + show(*integral, "u") + ", recurrence gives " +
                              show(want, "u"));
  } else {
    report.pass(label, n);
  }
}

}  // namespace

VerificationReport verify_egf(long n_max) {
  VerificationReport report("egf");
  if (n_max < 0) return report;
  const auto order = static_cast<std::size_t>(n_max);
  const PolySeries p = egf_P(order);
  const PolySeries q = egf_Q(order);
  for (long n = 0; n <= n_max; ++n) {
    check_egf_coefficient(report, "P(u,t) = (u + tan t)/(1 - u tan t)", n, p, derivative_poly_P(n));
    check_egf_coefficient(report, "Q(u,t) = sec t/(1 - u tan t)", n, q, derivative_poly_Q(n));
  }
  return report;
}

VerificationReport verify_alternating_egf(long n_max_a, long n_max_b) {
  using oracles::PermType;
  if (n_max_a > oracles::kMaxPermutationSize || n_max_b > oracles::kMaxSignedPermutationSize)
    throw oracles::GuardError("alternating check beyond enumeration guards (A <= " +
                              std::to_string(oracles::kMaxPermutationSize) + ", B <= " +
                              std::to_string(oracles::kMaxSignedPermutationSize) + ")");
  VerificationReport report("alternating");
  const long order = std::max({n_max_a, n_max_b, 0L});
  const RatSeries tan_plus_sec = tan_series(static_cast<std::size_t>(order)) +
                                 sec_series(static_cast<std::size_t>(order));

  auto series_value = [&](long n) -> Rational {
    return tan_plus_sec[static_cast<std::size_t>(n)] *
           Rational(algebra::factorial(static_cast<unsigned long>(n)));
  };
  auto recurrence_value = [](long n) -> BigInt {
    return derivative_poly_P(n)(0) + derivative_poly_Q(n)(0);
  };

  for (long n = 1; n <= n_max_a; ++n) {
    const BigInt brute = oracles::count_alternating(n, PermType::A);
    const Rational s = series_value(n);
    const BigInt r = recurrence_value(n);
    const std::string detail = "enumerated " + brute.get_str() + ", series " + s.get_str() +
                               ", P_n(0)+Q_n(0) " + r.get_str();
    if (s == Rational(brute) && r == brute)
      report.pass("E_n", n, detail);
    else
      report.fail("E_n", n, detail);
  }
  for (long n = 1; n <= n_max_b; ++n) {
    const BigInt brute = oracles::count_alternating(n, PermType::B);
    const BigInt scale = algebra::pow2(static_cast<unsigned long>(n));
    const Rational s = series_value(n) * Rational(scale);
    const BigInt r = scale * recurrence_value(n);
    const std::string detail = "enumerated " + brute.get_str() + ", 2^n series " + s.get_str() +
                               ", 2^n (P_n(0)+Q_n(0)) " + r.get_str();
    if (s == Rational(brute) && r == brute)
      report.pass("E_n^B = 2^n E_n", n, detail);
    else
      report.fail("E_n^B = 2^n E_n", n, detail);
  }
  return report;
}

}  // namespace cfgcalc::classical
