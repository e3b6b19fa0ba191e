#pragma once

#include "cfgcalc/algebra/unipoly.hpp"

namespace cfgcalc::classical {

using algebra::UniPoly;

/// P_0 = u, P_{n+1} = (1+u^2) P_n'. D^n(tan) = P_n(tan).
UniPoly derivative_poly_P(long n);
/// Q_0 = 1, Q_{n+1} = (1+u^2) Q_n' + u Q_n. D^n(sec) = sec Q_n(tan).
UniPoly derivative_poly_Q(long n);

/// sum_k C(n,k)^2 (x+1)^k (x-1)^(n-k); equals 2^n times the Legendre polynomial.
UniPoly legendre_like_L(long n);
/// (1/n) sum_k C(n,k) C(n,k+1) (x+1)^k (x-1)^(n-1-k). Throws std::logic_error
/// if the division by n is not exact.
UniPoly narayana_like_N(long n);

UniPoly chebyshev_T(long n);
UniPoly chebyshev_U(long n);

/// sum_k row[k] x^k
UniPoly from_row(const std::vector<algebra::BigInt>& row);

}  // namespace cfgcalc::classical
