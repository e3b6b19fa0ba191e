#include <doctest.h>

#include "cfgcalc/algebra/bigint.hpp"
#include "cfgcalc/classical/polynomials.hpp"
#include "cfgcalc/classical/series.hpp"
#include "cfgcalc/classical/verify.hpp"
#include "cfgcalc/oracles/enumerate.hpp"

using namespace cfgcalc::classical;
using cfgcalc::algebra::BigInt;
using cfgcalc::algebra::factorial;
using cfgcalc::algebra::make_rational;
using cfgcalc::algebra::pow2;

namespace {

UniPoly up(std::initializer_list<long> c) { return UniPoly(std::vector<BigInt>(c.begin(), c.end())); }

unsigned long ul(long n) { return static_cast<unsigned long>(n); }

int sign(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

TEST_CASE("derivative polynomials") {
  CHECK(derivative_poly_P(0) == up({0, 1}));
  CHECK(derivative_poly_P(1) == up({1, 0, 1}));
  CHECK(derivative_poly_Q(0) == up({1}));
  CHECK(derivative_poly_Q(1) == up({0, 1}));
  CHECK(derivative_poly_P(3) == up({2, 0, 8, 0, 6}));
  CHECK(derivative_poly_Q(3) == up({0, 5, 0, 6}));
  // expanded independently with a computer algebra system
  CHECK(derivative_poly_P(5) == up({16, 0, 136, 0, 240, 0, 120}));
  CHECK(derivative_poly_Q(5) == up({0, 61, 0, 180, 0, 120}));
}

TEST_CASE("degree and parity of P_n, Q_n") {
  for (long n = 0; n <= 15; ++n) {
    INFO("n=" << n);
    const UniPoly p = derivative_poly_P(n), q = derivative_poly_Q(n);
    CHECK(p.degree() == n + 1);
    CHECK(q.degree() == n);
    CHECK(p.reflect() == BigInt(sign(n + 1)) * p);
    CHECK(q.reflect() == BigInt(sign(n)) * q);
    // leading coefficients n! and n!
    CHECK(q.coeff(ul(n)) == factorial(ul(n)));
  }
}

TEST_CASE("Legendre-like and Narayana-like polynomials") {
  CHECK(legendre_like_L(1) == up({0, 2}));
  CHECK(legendre_like_L(2) == up({-2, 0, 6}));
  CHECK(legendre_like_L(3) == up({0, -12, 0, 20}));
  CHECK(legendre_like_L(5) == up({0, 60, 0, -280, 0, 252}));
  CHECK(narayana_like_N(1) == up({1}));
  CHECK(narayana_like_N(2) == up({0, 2}));
  CHECK(narayana_like_N(3) == up({-1, 0, 5}));
  CHECK(narayana_like_N(5) == up({2, 0, -28, 0, 42}));
  for (long n = 1; n <= 12; ++n) {
    const UniPoly l = legendre_like_L(n);
    CHECK(l(BigInt(1)) == pow2(ul(n)));
    CHECK(l.reflect() == BigInt(sign(n)) * l);
  }
}

TEST_CASE("Chebyshev polynomials") {
  CHECK(chebyshev_T(0) == up({1}));
  CHECK(chebyshev_T(1) == up({0, 1}));
  CHECK(chebyshev_T(2) == up({-1, 0, 2}));
  CHECK(chebyshev_U(2) == up({-1, 0, 4}));
  CHECK(chebyshev_T(3) == up({0, -3, 0, 4}));
  CHECK(chebyshev_U(3) == up({0, -4, 0, 8}));
  for (long n = 0; n <= 15; ++n) {
    // T_n(1) = 1, U_n(1) = n + 1, T_n' = n U_{n-1}
    CHECK(chebyshev_T(n)(BigInt(1)) == 1);
    CHECK(chebyshev_U(n)(BigInt(1)) == n + 1);
    if (n >= 1) CHECK(chebyshev_T(n).derivative() == BigInt(n) * chebyshev_U(n - 1));
  }
}

TEST_CASE("from_row") {
  CHECK(from_row({BigInt(1), BigInt(72), BigInt(80)}) == up({1, 72, 80}));
  CHECK(from_row({}) == UniPoly());
}

TEST_CASE("trigonometric series") {
  const auto tan = tan_series(9);
  CHECK(tan[0] == 0);
  CHECK(tan[1] == 1);
  CHECK(tan[3] == make_rational(1, 3));
  CHECK(tan[5] == make_rational(2, 15));
  CHECK(tan[7] == make_rational(17, 315));
  CHECK(tan[9] == make_rational(62, 2835));
  const auto sec = sec_series(8);
  CHECK(sec[2] == make_rational(1, 2));
  CHECK(sec[4] == make_rational(5, 24));
  CHECK(sec[6] == make_rational(61, 720));
  CHECK(sec[8] == make_rational(277, 8064));
  const auto s = sin_series(10), c = cos_series(10);
  const auto one = s * s + c * c;
  CHECK(one[0] == 1);
  for (std::size_t i = 1; i <= 10; ++i) CHECK(one[i] == 0);
  CHECK_THROWS_AS(sin_series(3) + cos_series(4), std::invalid_argument);
}

TEST_CASE("closed-form EGFs") {
  const auto p = egf_P(6), q = egf_Q(6);
  CHECK(p[0] == to_rational(derivative_poly_P(0)));
  CHECK(q[1] == to_rational(derivative_poly_Q(1)));
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto scale = Rational(factorial(n));
    CHECK(p[n] * scale == to_rational(derivative_poly_P(static_cast<long>(n))));
    CHECK(q[n] * scale == to_rational(derivative_poly_Q(static_cast<long>(n))));
  }
}

TEST_CASE("verification reports") {
  const auto prop = verify_prop12(12);
  CHECK(prop.passed());
  CHECK(prop.checks().size() == 26);  // two identities for n = 0..12
  CHECK(verify_egf(12).passed());
  const auto alt = verify_alternating_egf(8, 6);
  CHECK(alt.passed());
  CHECK(alt.checks().size() == 14);
  CHECK_THROWS_AS(verify_alternating_egf(10, 6), cfgcalc::oracles::GuardError);
  CHECK_THROWS_AS(verify_alternating_egf(8, 8), cfgcalc::oracles::GuardError);
}

TEST_CASE("E_n from the derivative polynomials") {
  const long expected[] = {1, 1, 1, 2, 5, 16, 61, 272, 1385};
  for (long n = 0; n <= 8; ++n)
    CHECK(derivative_poly_P(n)(BigInt(0)) + derivative_poly_Q(n)(BigInt(0)) == expected[n]);
}
