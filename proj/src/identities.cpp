#include "cfgcalc/suite/identities.hpp"

#include "cfgcalc/algebra/expression.hpp"
#include "cfgcalc/grammar/catalog.hpp"
#include "cfgcalc/numbers/triangles.hpp"

namespace cfgcalc::suite {

using algebra::BigInt;
using algebra::binomial;
using algebra::factorial;
using algebra::parse_poly;
using algebra::pow2;
using grammar::MonomialFamily;
using grammar::OperatorExpr;

namespace {

unsigned long u(long n) { return static_cast<unsigned long>(n); }
BigInt one(long) { return 1; }

}  // namespace

std::vector<GrammarIdentity> secant_tangent_identities() {
  const auto g = grammar::secant_tangent_grammar();
  const auto& a = g.alphabet();
  const auto d = OperatorExpr::derivative();
  const auto fd = OperatorExpr::post_multiply("f");
  return {
      {"D^n(f) = sum b(n,k) f^(2k+1) g^(n-2k)", g, d, parse_poly("f", a),
       [a](long n) { return MonomialFamily(a, {{"f", 1, 2}, {"g", n, -2}}); },
       numbers::gamma_b, one},
      {"D^n(g) = 2^(n+1) sum a(n,k) f^(2k+2) g^(n-1-2k)", g, d, parse_poly("g", a),
       [a](long n) { return MonomialFamily(a, {{"f", 2, 2}, {"g", n - 1, -2}}); },
       numbers::gamma_a, [](long n) { return pow2(u(n) + 1); }},
      {"(fD)^n(f) = n! sum H(n,k) f^(n+1+2k) g^(n-2k)", g, fd, parse_poly("f", a),
       [a](long n) { return MonomialFamily(a, {{"f", n + 1, 2}, {"g", n, -2}}); },
       numbers::central_H, [](long n) { return factorial(u(n)); }},
      {"(fD)^n(g) = 2 (n+1)! sum F(n,k) f^(n+2+2k) g^(n-1-2k)", g, fd, parse_poly("g", a),
       [a](long n) { return MonomialFamily(a, {{"f", n + 2, 2}, {"g", n - 1, -2}}); },
       numbers::motzkin_F, [](long n) { return BigInt(2 * factorial(u(n) + 1)); }},
  };
}

std::vector<GrammarIdentity> eulerian_identities() {
  const auto g = grammar::eulerian_grammar();
  const auto& a = g.alphabet();
  const auto dy = OperatorExpr::pre_multiply("y");
  return {
      {"(Dy)^n(y) = 2^n sum A(n,k) y^(2n-2k-1) z^(2k+2)", g, dy, parse_poly("y", a),
       [a](long n) { return MonomialFamily(a, {{"y", 2 * n - 1, -2}, {"z", 2, 2}}); },
       numbers::eulerian_a, [](long n) { return pow2(u(n)); }},
      {"(Dy)^n(z) = sum B(n,k) y^(2n-2k) z^(2k+1)", g, dy, parse_poly("z", a),
       [a](long n) { return MonomialFamily(a, {{"y", 2 * n, -2}, {"z", 1, 2}}); },
       numbers::eulerian_b, one},
  };
}

GrammarIdentity associahedron_uv_identity() {
  const auto g = grammar::associahedron_grammar();
  const auto& a = g.alphabet();
  return {"D^n(uv) = n! sum 4^k C(n+1,2k) u^(n+1+2k) v^(n+1-2k)", g, OperatorExpr::derivative(),
          parse_poly("u*v", a),
          [a](long n) { return MonomialFamily(a, {{"u", n + 1, 2}, {"v", n + 1, -2}}); },
          [](long n, long k) { return BigInt(algebra::ipow(4, u(k)) * binomial(n + 1, 2 * k)); },
          [](long n) { return factorial(u(n)); }};
}

std::vector<GrammarIdentity> chebyshev_coefficient_identities() {
  const auto g = grammar::chebyshev_grammar();
  const auto& a = g.alphabet();
  const auto d = OperatorExpr::derivative();
  return {
      {"D^n(uv) = n! sum C(n+1,2k) u^(n+1+2k) v^(n+1-2k)", g, d, parse_poly("u*v", a),
       [a](long n) { return MonomialFamily(a, {{"u", n + 1, 2}, {"v", n + 1, -2}}); },
       [](long n, long k) { return binomial(n + 1, 2 * k); },
       [](long n) { return factorial(u(n)); }},
      {"D^n(u^2) = n! sum C(n+1,2k+1) u^(n+2+2k) v^(n-2k)", g, d, parse_poly("u^2", a),
       [a](long n) { return MonomialFamily(a, {{"u", n + 2, 2}, {"v", n, -2}}); },
       [](long n, long k) { return binomial(n + 1, 2 * k + 1); },
       [](long n) { return factorial(u(n)); }},
  };
}

GrammarIdentity gamma_a_shifted_identity() {
  const auto g = grammar::gamma_a_grammar();
  const auto& a = g.alphabet();
  return {"D^n(u) = sum a(n+1,k) u^(k+1) v^(n-2k)", g, OperatorExpr::derivative(),
          parse_poly("u", a),
          [a](long n) { return MonomialFamily(a, {{"u", 1, 1}, {"v", n, -2}}); },
          [](long n, long k) { return numbers::gamma_a(n + 1, k); }, one};
}

std::vector<GrammarIdentity> motzkin_identities() {
  const auto g = grammar::motzkin_grammar();
  const auto& a = g.alphabet();
  const auto d = OperatorExpr::derivative();
  return {
      {"D^n(t^2 u^2) = (n+1)! t^2 sum T(n,k) u^(2n+2-k) v^k", g, d, parse_poly("t^2*u^2", a),
       [a](long n) { return MonomialFamily(a, {{"t", 2, 0}, {"u", 2 * n + 2, -1}, {"v", 0, 1}}); },
       numbers::motzkin_T, [](long n) { return factorial(u(n) + 1); }},
      {"D^n(t^2 u) = n! t^2 sum C(n,k) 2^(n-k) u^(2n+1-k) v^k", g, d, parse_poly("t^2*u", a),
       [a](long n) { return MonomialFamily(a, {{"t", 2, 0}, {"u", 2 * n + 1, -1}, {"v", 0, 1}}); },
       numbers::cube_f, [](long n) { return factorial(u(n)); }},
  };
}

}  // namespace cfgcalc::suite
