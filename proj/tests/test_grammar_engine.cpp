#include <doctest.h>

#include "cfgcalc/algebra/bigint.hpp"
#include "cfgcalc/algebra/expression.hpp"
#include "cfgcalc/grammar/catalog.hpp"
#include "cfgcalc/grammar/config.hpp"
#include "cfgcalc/grammar/identity.hpp"
#include "cfgcalc/grammar/rule_parser.hpp"
#include "support/check.hpp"

using namespace cfgcalc::grammar;
using cfgcalc::algebra::BigInt;
using cfgcalc::algebra::binomial;
using cfgcalc::algebra::factorial;
using cfgcalc::algebra::ipow;
using cfgcalc::algebra::parse_poly;
using cfgcalc::algebra::pow2;
using cfgcalc::testing::check_property;
namespace t = cfgcalc::testing;

namespace {

MultiPoly poly(const Grammar& g, std::string_view s) { return parse_poly(s, g.alphabet()); }

unsigned long ul(long n) { return static_cast<unsigned long>(n); }

GrammarIdentity g2_uv_identity() {
  const Grammar g = parse_grammar("u -> u^2*v; v -> 4*u^3");
  const Alphabet a = g.alphabet();
  return {"G2 D^n(uv)", g, OperatorExpr::derivative(), poly(g, "u*v"),
          [a](long n) { return MonomialFamily(a, {{"u", n + 1, 2}, {"v", n + 1, -2}}); },
          [](long n, long k) { return BigInt(ipow(4, ul(k)) * binomial(n + 1, 2 * k)); },
          [](long n) { return factorial(ul(n)); }};
}

}  // namespace

TEST_CASE("apply_D") {
  const Grammar ex = parse_grammar("u -> u*v; v -> v");
  CHECK(apply_D(ex, poly(ex, "u")) == poly(ex, "u*v"));

  const Grammar g1 = parse_grammar("f -> f*g; g -> 4*f^2");
  CHECK(apply_D(g1, apply_D(g1, poly(g1, "f"))) == poly(g1, "f*g^2 + 4*f^3"));
  CHECK(apply_D(g1, poly(g1, "1")).is_zero());
  CHECK(apply_D(ex, poly(ex, "7")).is_zero());
  CHECK_THROWS_AS(apply_D(g1, poly(ex, "u")), cfgcalc::algebra::AlphabetError);
}

TEST_CASE("iterate_operator") {
  const Grammar ex = parse_grammar("u -> u*v; v -> v");
  const auto d = OperatorExpr::derivative();
  CHECK(iterate_operator(ex, d, poly(ex, "u"), 3) == poly(ex, "u*(v + 3*v^2 + v^3)"));

  const Grammar g2 = parse_grammar("u -> u^2*v; v -> 4*u^3");
  CHECK(iterate_operator(g2, d, poly(g2, "u*v"), 1) == poly(g2, "u^2*v^2 + 4*u^4"));

  const Grammar g1 = secant_tangent_grammar();
  CHECK(iterate_operator(g1, OperatorExpr::post_multiply("f"), poly(g1, "f"), 0) ==
        poly(g1, "f"));
  CHECK(iterate_operator(g1, OperatorExpr::post_multiply("f"), poly(g1, "f"), 1) ==
        poly(g1, "f^2*g"));
  CHECK(iterate_operator(g1, OperatorExpr::pre_multiply("f"), poly(g1, "f"), 1) ==
        poly(g1, "2*f^2*g"));
  // D^6(f) and (fD)^4(f), expanded independently with a computer algebra system.
  CHECK(iterate_operator(g1, d, poly(g1, "f"), 6) ==
        poly(g1, "3904*f^7 + 7664*f^5*g^2 + 716*f^3*g^4 + f*g^6"));
  CHECK(iterate_operator(g1, OperatorExpr::post_multiply("f"), poly(g1, "f"), 4) ==
        poly(g1, "144*f^9 + 288*f^7*g^2 + 24*f^5*g^4"));

  CHECK_THROWS_AS(iterate_operator(g1, OperatorExpr::pre_multiply("w"), poly(g1, "f"), 1),
                  cfgcalc::algebra::AlphabetError);
  CHECK_THROWS_AS(iterate_operator(g1, d, poly(ex, "u"), 0), cfgcalc::algebra::AlphabetError);
}

TEST_CASE("operator expressions") {
  CHECK(OperatorExpr::parse("D") == OperatorExpr::derivative());
  CHECK(OperatorExpr::parse("preD:y") == OperatorExpr::pre_multiply("y"));
  CHECK(OperatorExpr::parse("postD:f") == OperatorExpr::post_multiply("f"));
  CHECK(to_string(OperatorExpr::pre_multiply("y")) == "preD:y");
  CHECK(to_string(OperatorExpr::parse("postD:f")) == "postD:f");
  CHECK_THROWS_AS(OperatorExpr::parse("E"), std::invalid_argument);
  CHECK_THROWS_AS(OperatorExpr::parse("preD:"), std::invalid_argument);
  CHECK_THROWS_AS(OperatorExpr::parse("preD:1x"), std::invalid_argument);
}

TEST_CASE("operator orbit memoizes") {
  const Grammar g = secant_tangent_grammar();
  OperatorOrbit orbit(g, OperatorExpr::derivative(), poly(g, "f"));
  CHECK(orbit[2] == poly(g, "f*g^2 + 4*f^3"));
  CHECK(orbit.computed() == 3);
  CHECK(orbit[1] == poly(g, "f*g"));
  CHECK(orbit.computed() == 3);
  CHECK(orbit[6] == iterate_operator(g, OperatorExpr::derivative(), poly(g, "f"), 6));
}

TEST_CASE("expansion_coefficients") {
  const Grammar g = secant_tangent_grammar();
  const Alphabet& a = g.alphabet();
  const auto d = OperatorExpr::derivative();
  CHECK(expansion_coefficients(iterate_operator(g, d, poly(g, "f"), 2),
                               MonomialFamily(a, {{"f", 1, 2}, {"g", 2, -2}})) ==
        std::vector<BigInt>{1, 4});
  CHECK(expansion_coefficients(poly(g, "f"), MonomialFamily(a, {{"f", 1, 2}, {"g", 0, -2}})) ==
        std::vector<BigInt>{1});
  CHECK(expansion_coefficients(iterate_operator(g, d, poly(g, "f"), 4),
                               MonomialFamily(a, {{"f", 1, 2}, {"g", 4, -2}})) ==
        std::vector<BigInt>{1, 72, 80});
  // absent members read as zero
  CHECK(expansion_coefficients(poly(g, "f^3*g^2"),
                               MonomialFamily(a, {{"f", 1, 2}, {"g", 4, -2}})) ==
        std::vector<BigInt>{0, 1, 0});
  CHECK_THROWS_AS(expansion_coefficients(poly(g, "f^2"),
                                         MonomialFamily(a, {{"f", 1, 2}, {"g", 4, -2}})),
                  PatternMismatch);
  CHECK_THROWS_AS(MonomialFamily(a, {{"f", 1, 2}}), std::invalid_argument);
}

TEST_CASE("monomial family") {
  const Alphabet a{"u", "v"};
  const MonomialFamily fam(a, {{"u", 3, 2}, {"v", 3, -2}});
  CHECK(fam.max_index() == 1);
  CHECK(fam.member(1) == cfgcalc::algebra::Monomial{5, 1});
  CHECK(fam.index_of(cfgcalc::algebra::Monomial{3, 3}) == 0);
  CHECK_FALSE(fam.index_of(cfgcalc::algebra::Monomial{4, 2}).has_value());
  CHECK_THROWS_AS(fam.member(2), std::out_of_range);
}

TEST_CASE("verify_identity passes on the known expansions") {
  const Grammar g1 = secant_tangent_grammar();
  const Alphabet a1 = g1.alphabet();
  // a(n,k) for n <= 4 transcribed from the gamma polynomials 1, 1, 1+2x, 1+8x
  const auto a_small = [](long n, long k) -> BigInt {
    static const std::vector<std::vector<long>> rows{{1}, {1}, {1, 2}, {1, 8}};
    const auto& row = rows.at(static_cast<std::size_t>(n - 1));
    return k < static_cast<long>(row.size()) ? row[static_cast<std::size_t>(k)] : 0;
  };
  const GrammarIdentity dg{"D^n(g)", g1, OperatorExpr::derivative(), poly(g1, "g"),
                           [a1](long n) {
                             return MonomialFamily(a1, {{"f", 2, 2}, {"g", n - 1, -2}});
                           },
                           a_small, [](long n) { return pow2(ul(n) + 1); }};
  const auto r1 = verify_identity(dg, 4);
  CHECK(r1.passed());
  CHECK(r1.checks().size() == 4);

  const auto r2 = verify_identity(g2_uv_identity(), 12);
  CHECK(r2.passed());
  CHECK(r2.checks().size() == 12);

  const Grammar gm = parse_grammar("t -> t*u^2; u -> u^2*v; v -> 4*u^3");
  const Alphabet am = gm.alphabet();
  const GrammarIdentity t2u{"D^n(t^2 u)", gm, OperatorExpr::derivative(), poly(gm, "t^2*u"),
                            [am](long n) {
                              return MonomialFamily(am,
                                                    {{"t", 2, 0}, {"u", 2 * n + 1, -1}, {"v", 0, 1}});
                            },
                            [](long n, long k) {
                              return k > n ? BigInt(0) : BigInt(binomial(n, k) * pow2(ul(n - k)));
                            },
                            [](long n) { return factorial(ul(n)); }};
  CHECK(verify_identity(t2u, 12).passed());
}

TEST_CASE("verify_identity reports every failure with its first mismatch") {
  GrammarIdentity wrong = g2_uv_identity();
  wrong.coefficient = [](long n, long k) {
    BigInt c = ipow(4, ul(k)) * binomial(n + 1, 2 * k);
    if (n >= 3 && k >= 1) c += 1;
    return c;
  };
  const auto r = verify_identity(wrong, 5);
  CHECK_FALSE(r.passed());
  CHECK(r.failure_count() == 3);
  REQUIRE(r.checks().size() == 5);
  CHECK(r.checks()[1].passed);
  const auto& c = r.checks()[2];
  CHECK_FALSE(c.passed);
  CHECK(c.n == 3);
  REQUIRE(c.mismatch.has_value());
  CHECK(c.mismatch->k == 1);
  CHECK(c.mismatch->actual == factorial(3) * 4 * binomial(4, 2));
  CHECK(c.mismatch->expected == factorial(3) * (4 * binomial(4, 2) + 1));

  GrammarIdentity off_pattern = g2_uv_identity();
  off_pattern.family = [a = off_pattern.grammar.alphabet()](long n) {
    return MonomialFamily(a, {{"u", n, 2}, {"v", n + 2, -2}});
  };
  const auto r2 = verify_identity(off_pattern, 2);
  CHECK(r2.failure_count() == 2);
  CHECK_FALSE(r2.checks()[0].mismatch.has_value());
}

TEST_CASE("structure of D^n(f) under the secant-tangent grammar") {
  const Grammar g = secant_tangent_grammar();
  OperatorOrbit orbit(g, OperatorExpr::derivative(), poly(g, "f"));
  for (std::size_t n = 0; n <= 14; ++n) {
    for (const auto& [m, c] : orbit[n].terms()) {
      CHECK(m[0] % 2 == 1);
      CHECK(m.degree() == n + 1);
      CHECK(c > 0);
    }
  }
}

TEST_CASE("homogeneity of D^n(uv) under G2") {
  const Grammar g = associahedron_grammar();
  OperatorOrbit orbit(g, OperatorExpr::derivative(), poly(g, "u*v"));
  for (std::size_t n = 0; n <= 14; ++n)
    for (const auto& [m, c] : orbit[n].terms()) CHECK(m.degree() == 2 * (n + 1));
}

TEST_CASE("parse_grammar") {
  const Grammar g1 = parse_grammar("u -> u*v; v -> 4*u^2");
  CHECK(g1.alphabet() == Alphabet{"u", "v"});
  CHECK(g1.rule("u") == poly(g1, "u*v"));
  CHECK(g1.rule("v") == poly(g1, "4*u^2"));
  CHECK(to_string(g1) == "u -> u*v; v -> 4*u^2");

  const Grammar g2 = parse_grammar("u -> u^2*v; v -> 4*u^3");
  CHECK(g2 == associahedron_grammar());
  CHECK(parse_grammar("u->u*v\nv->4*u^2\n") == g1);
  CHECK(parse_grammar("  u  ->  u * v ;; v -> 4 * u ^ 2 ; ") == g1);
  // right-hand sides may mention letters whose rules come later
  CHECK(parse_grammar("v -> 4*u^2; u -> u*v").alphabet() == Alphabet{"v", "u"});

  try {
    (void)parse_grammar("u -> w");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.message() == "undeclared letter 'w'");
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
  try {
    (void)parse_grammar("u -> u*v\nu -> v\nv -> 1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 1);
  }
  CHECK_THROWS_AS(parse_grammar(""), ParseError);
  CHECK_THROWS_AS(parse_grammar("u u*v"), ParseError);
  CHECK_THROWS_AS(parse_grammar("u -> "), ParseError);
  CHECK_THROWS_AS(parse_grammar("u -> u +* u"), ParseError);
  CHECK_THROWS_AS(parse_grammar("3 -> u"), ParseError);
}

TEST_CASE("built-in grammars parse and are closed") {
  for (const auto& named : builtin_grammars()) {
    const Grammar g = builtin_grammar(named.name);
    CHECK(g.rules().size() == g.alphabet().size());
  }
  CHECK_THROWS_AS(builtin_grammar("nope"), std::invalid_argument);
}

TEST_CASE("grammar config files") {
  const std::string text =
      "# two grammars\n"
      "[g1]\n"
      "u -> u*v\n"
      "v -> 4*u^2\n"
      "\n"
      "[eulerian]\n"
      "y -> z^2; z -> y*z\n";
  const auto config = parse_grammar_config(text);
  REQUIRE(config.size() == 2);
  CHECK(config_grammar(config, "g1") == parse_grammar("u -> u*v; v -> 4*u^2"));
  CHECK(config_grammar(config, "eulerian") == eulerian_grammar());
  CHECK_THROWS_AS(config_grammar(config, "g2"), std::invalid_argument);

  try {
    (void)parse_grammar_config("[a]\nu -> u\n[b]\nu -> w\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 6);
  }
  CHECK_THROWS_AS(parse_grammar_config("u -> u\n"), ParseError);
  CHECK_THROWS_AS(parse_grammar_config("[a\nu -> u\n"), ParseError);
  CHECK_THROWS_AS(parse_grammar_config("[a]\nu -> u\n[a]\nu -> u\n"), ParseError);
}

TEST_CASE("property: D is linear") { check_property(t::grammar_linearity); }
TEST_CASE("property: D satisfies Leibniz") { check_property(t::grammar_leibniz); }
TEST_CASE("property: weighted operators") { check_property(t::weighted_operator_step, 150); }
