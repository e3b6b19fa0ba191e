#pragma once

#include <stdexcept>
#include <vector>

#include "cfgcalc/algebra/bigint.hpp"

namespace cfgcalc::gamma {

using algebra::BigInt;

/// h_0 + h_1 x + ... + h_d x^d. The degree bound d is structural and may
/// exceed the actual degree.
struct HPoly {
  std::vector<BigInt> coeffs;  // size d + 1
  long d = 0;

  HPoly() = default;
  HPoly(std::vector<BigInt> h, long bound);
  /// Coefficients padded to d + 1 entries; d = coeffs.size() - 1.
  explicit HPoly(std::vector<BigInt> h);

  bool palindromic() const;
  friend bool operator==(const HPoly&, const HPoly&) = default;
};

/// gamma_0 .. gamma_{floor(d/2)} of h = sum gamma_i x^i (1+x)^(d-2i).
struct GammaVector {
  std::vector<BigInt> gammas;  // size floor(d/2) + 1
  long d = 0;

  GammaVector() = default;
  /// Pads with zeros to floor(d/2) + 1 entries; throws if longer.
  GammaVector(std::vector<BigInt> g, long bound);

  friend bool operator==(const GammaVector&, const GammaVector&) = default;
};

/// Raised by h_to_gamma when h is not symmetric about d/2.
class NotPalindromic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

HPoly gamma_to_h(const GammaVector& g);
GammaVector h_to_gamma(const HPoly& h);

enum class Family { A, B };

/// Eulerian polynomial of type A (d = n-1) or B (d = n).
HPoly coxeter_h(Family type, long n);
/// Narayana polynomial (type A, d = n-1) or sum C(n,k)^2 x^k (type B, d = n).
HPoly associahedron_h(Family type, long n);

/// The gamma row predicted for each family: a(n,.), b(n,.), F(n,.), H(n,.).
GammaVector coxeter_gamma(Family type, long n);
GammaVector associahedron_gamma(Family type, long n);

}  // namespace cfgcalc::gamma
