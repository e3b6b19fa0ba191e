#include "cfgcalc/classical/polynomials.hpp"

#include <stdexcept>
#include <string>

namespace cfgcalc::classical {

using algebra::BigInt;
using algebra::binomial;

namespace {

const UniPoly& one_plus_u2() {
  static const UniPoly p({1, 0, 1});
  return p;
}

void require_nonnegative(const char* what, long n) {
  if (n < 0) throw std::domain_error(std::string(what) + " needs n >= 0");
}

}  // namespace

UniPoly derivative_poly_P(long n) {
  require_nonnegative("derivative_poly_P", n);
  UniPoly p = UniPoly::x();
  for (long i = 0; i < n; ++i) p = one_plus_u2() * p.derivative();
  return p;
}

UniPoly derivative_poly_Q(long n) {
  require_nonnegative("derivative_poly_Q", n);
  UniPoly q = UniPoly::constant(1);
  for (long i = 0; i < n; ++i) q = one_plus_u2() * q.derivative() + UniPoly::x() * q;
  return q;
}

UniPoly legendre_like_L(long n) {
  if (n < 1) throw std::domain_error("legendre_like_L needs n >= 1");
  const UniPoly xp1({1, 1}), xm1({-1, 1});
  UniPoly sum;
  for (long k = 0; k <= n; ++k) {
    const BigInt c = binomial(n, k);
    sum += algebra::pow(xp1, static_cast<unsigned long>(k)) *
           algebra::pow(xm1, static_cast<unsigned long>(n - k)) * BigInt(c * c);
  }
  return sum;
}

UniPoly narayana_like_N(long n) {
  if (n < 1) throw std::domain_error("narayana_like_N needs n >= 1");
  const UniPoly xp1({1, 1}), xm1({-1, 1});
  UniPoly sum;
  for (long k = 0; k <= n - 1; ++k) {
    sum += algebra::pow(xp1, static_cast<unsigned long>(k)) *
           algebra::pow(xm1, static_cast<unsigned long>(n - 1 - k)) *
           BigInt(binomial(n, k) * binomial(n, k + 1));
  }
  std::vector<BigInt> c = sum.coeffs();
  for (auto& v : c) v = algebra::exact_div(v, n);
  return UniPoly(std::move(c));
}

UniPoly chebyshev_T(long n) {
  require_nonnegative("chebyshev_T", n);
  UniPoly prev = UniPoly::constant(1), cur = UniPoly::x();
  if (n == 0) return prev;
  const UniPoly two_x = UniPoly::monomial(2, 1);
  for (long i = 1; i < n; ++i) {
    UniPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UniPoly chebyshev_U(long n) {
  require_nonnegative("chebyshev_U", n);
  const UniPoly two_x = UniPoly::monomial(2, 1);
  UniPoly prev = UniPoly::constant(1), cur = two_x;
  if (n == 0) return prev;
  for (long i = 1; i < n; ++i) {
    UniPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

UniPoly from_row(const std::vector<BigInt>& row) { return UniPoly(row); }

}  // namespace cfgcalc::classical
