#include "cfgcalc/quadext/verify.hpp"

#include <optional>
#include <string>

#include "cfgcalc/algebra/expression.hpp"
#include "cfgcalc/classical/polynomials.hpp"
#include "cfgcalc/grammar/catalog.hpp"
#include "cfgcalc/numbers/triangles.hpp"
#include "cfgcalc/quadext/ext_poly.hpp"

namespace cfgcalc::quadext {

using algebra::Alphabet;
using algebra::MultiPoly;
using algebra::factorial;
using algebra::pow2;

namespace {

std::vector<BigInt> row(BigInt (*entry)(long, long), long n, long max_k) {
  std::vector<BigInt> r;
  for (long k = 0; k <= max_k; ++k) r.push_back(entry(n, k));
  return r;
}

// sum_k c_k s^(shift+k) q^(lift-k), computed in the ring.
ExtPoly cleared_sum(const UniPoly& p, long shift, long lift, const UniPoly& q) {
  const ExtPoly s = ExtPoly::root(q);
  ExtPoly sum = ExtPoly::base(UniPoly(), q);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k] == 0) continue;
    const long qe = lift - static_cast<long>(k);
    if (qe < 0) throw std::logic_error("denominator not cleared: degree exceeds lift");
    const ExtPoly term = pow(s, static_cast<unsigned long>(shift) + k) *
                         ExtPoly::base(algebra::pow(q, static_cast<unsigned long>(qe)), q);
    sum += term * p.coeffs()[k];
  }
  return sum;
}

void compare_real(VerificationReport& report, const std::string& label, long n,
                  const ExtPoly& rhs, const UniPoly& lhs, const char* var) {
  if (!rhs.in_base_ring()) {
    report.fail(label, n, "odd power of the square root survives: " + to_string(rhs, var));
  } else if (rhs.a() != lhs) {
    report.fail(label, n, "left " + algebra::to_string(lhs, var) + " != right " +
                              algebra::to_string(rhs.a(), var));
  } else {
    report.pass(label, n);
  }
}

}  // namespace

VerificationReport verify_thm31(long n_max) {
  VerificationReport report("thm31");
  const UniPoly q({-1, 4});
  const UniPoly x = UniPoly::x();
  for (long n = 1; n <= n_max; ++n) {
    const auto un = static_cast<unsigned long>(n);
    const UniPoly a_n = classical::from_row(row(numbers::gamma_a, n, (n - 1) / 2));
    const UniPoly lhs_a = x * a_n * algebra::pow(q, un + 1) * pow2(un + 1);
    const ExtPoly rhs_a = cleared_sum(classical::derivative_poly_P(n), n + 1, n + 1, q);
    compare_real(report, "2^(n+1) x a_n q^(n+1) = sum [P_n]_k s^(n+1+k) q^(n+1-k)", n, rhs_a,
                 lhs_a, "x");

    const UniPoly b_n = classical::from_row(row(numbers::gamma_b, n, n / 2));
    const UniPoly lhs_b = b_n * algebra::pow(q, un);
    const ExtPoly rhs_b = cleared_sum(classical::derivative_poly_Q(n), n, n, q);
    compare_real(report, "q^n b_n = sum [Q_n]_k s^(n+k) q^(n-k)", n, rhs_b, lhs_b, "x");
  }
  return report;
}

namespace {

// Strips f^e from p(f, g) after g = 2h, then folds f^2 = 1 + h^2.
std::optional<UniPoly> reduce_over_h(const MultiPoly& p, unsigned e, std::string& why) {
  const Alphabet h{"h"};
  try {
    const MultiPoly stripped = algebra::divide_by_letter_power(
        algebra::substitute(p, "g", algebra::parse_poly("2*h", h)), "f", e);
    const auto r = algebra::substitute_square_with_parity(stripped, "f",
                                                          algebra::parse_poly("1 + h^2", h));
    if (r.parity != 0) {
      why = "odd power of f left after factoring f^" + std::to_string(e);
      return std::nullopt;
    }
    return algebra::to_unipoly(r.reduced, "h");
  } catch (const std::exception& ex) {
    why = ex.what();
    return std::nullopt;
  }
}

}  // namespace

VerificationReport verify_cor33(long n_max) {
  VerificationReport report("cor33");
  const auto g = grammar::secant_tangent_grammar();
  const auto op = grammar::OperatorExpr::post_multiply("f");
  grammar::OperatorOrbit of(g, op, MultiPoly::letter(g.alphabet(), "f"));
  grammar::OperatorOrbit og(g, op, MultiPoly::letter(g.alphabet(), "g"));

  const UniPoly minus_one = UniPoly::constant(-1);
  const ExtPoly i = ExtPoly::root(minus_one);
  const ExtPoly ih(UniPoly(), UniPoly::x(), minus_one);
  const ExtPoly minus_i = -i;

  for (long n = 1; n <= n_max; ++n) {
    const auto un = static_cast<unsigned long>(n);
    const std::string label_f = "(fD)^n(f) = n! f^(n+1) (-i)^n L_n(i h)";
    std::string why;
    if (auto lhs = reduce_over_h(of[un], static_cast<unsigned>(n + 1), why)) {
      const ExtPoly rhs =
          pow(minus_i, un) * evaluate(classical::legendre_like_L(n), ih) * factorial(un);
      compare_real(report, label_f, n, rhs, *lhs, "h");
    } else {
      report.fail(label_f, n, why);
    }

    const std::string label_g = "(fD)^n(g) = 2 (n+1)! f^(n+2) (-i)^(n-1) N_n(i h)";
    if (auto lhs = reduce_over_h(og[un], static_cast<unsigned>(n + 2), why)) {
      const ExtPoly rhs = pow(minus_i, un - 1) * evaluate(classical::narayana_like_N(n), ih) *
                          BigInt(2 * factorial(un + 1));
      compare_real(report, label_g, n, rhs, *lhs, "h");
    } else {
      report.fail(label_g, n, why);
    }
  }
  return report;
}

namespace {

// Maps u -> s, v -> x into Z[x][s]/(s^2 - q). Returns nullopt (with reason)
// if the u-exponents have mixed parity, which no valid identity produces.
std::optional<ExtPoly> specialize(const MultiPoly& p, const UniPoly& q, std::string& why) {
  const std::size_t u = p.alphabet().index_of("u");
  const std::size_t v = p.alphabet().index_of("v");
  const ExtPoly s = ExtPoly::root(q);
  ExtPoly out = ExtPoly::base(UniPoly(), q);
  std::optional<unsigned> parity;
  for (const auto& [m, c] : p.terms()) {
    if (parity && *parity != m[u] % 2) {
      why = "mixed parity of u in " + algebra::to_string(p);
      return std::nullopt;
    }
    parity = m[u] % 2;
    out += pow(s, m[u]) * ExtPoly::base(UniPoly::monomial(c, m[v]), q);
  }
  return out;
}

}  // namespace

VerificationReport verify_thm42_special(long n_max) {
  VerificationReport report("thm42-chebyshev");
  const auto g = grammar::chebyshev_grammar();
  const auto& a = g.alphabet();
  grammar::OperatorOrbit duv(g, grammar::OperatorExpr::derivative(),
                             algebra::parse_poly("u*v", a));
  grammar::OperatorOrbit du2(g, grammar::OperatorExpr::derivative(),
                             algebra::parse_poly("u^2", a));
  const UniPoly q({-1, 0, 1});
  const ExtPoly s = ExtPoly::root(q);

  for (long n = 0; n <= n_max; ++n) {
    const auto un = static_cast<unsigned long>(n);
    std::string why;
    const std::string label_t = "D^n(uv) = n! (x^2-1)^((n+1)/2) T_{n+1}(x)";
    if (auto lhs = specialize(duv[un], q, why)) {
      const ExtPoly rhs =
          pow(s, un + 1) * ExtPoly::base(classical::chebyshev_T(n + 1), q) * factorial(un);
      if (*lhs == rhs)
        report.pass(label_t, n);
      else
        report.fail(label_t, n, "left " + to_string(*lhs) + " != right " + to_string(rhs));
    } else {
      report.fail(label_t, n, why);
    }

    const std::string label_u = "D^n(u^2) = n! (x^2-1)^((n+2)/2) U_n(x)";
    if (auto lhs = specialize(du2[un], q, why)) {
      const ExtPoly rhs =
          pow(s, un + 2) * ExtPoly::base(classical::chebyshev_U(n), q) * factorial(un);
      if (*lhs == rhs)
        report.pass(label_u, n);
      else
        report.fail(label_u, n, "left " + to_string(*lhs) + " != right " + to_string(rhs));
    } else {
      report.fail(label_u, n, why);
    }
  }
  return report;
}

}  // namespace cfgcalc::quadext
