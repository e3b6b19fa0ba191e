#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "cfgcalc/algebra/unipoly.hpp"

namespace cfgcalc::quadext {

using algebra::BigInt;
using algebra::UniPoly;

class ModulusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// a(x) + b(x) s in Z[x][s]/(s^2 - q(x)). A constant q = -1 gives the
/// Gaussian integers over Z[x]. Values are always reduced, so equality is
/// componentwise.
class ExtPoly {
 public:
  ExtPoly(UniPoly a, UniPoly b, UniPoly modulus);

  static ExtPoly base(UniPoly a, UniPoly modulus) {
    return ExtPoly(std::move(a), UniPoly(), std::move(modulus));
  }
  /// The adjoined square root s.
  static ExtPoly root(UniPoly modulus) {
    return ExtPoly(UniPoly(), UniPoly::constant(1), std::move(modulus));
  }

  const UniPoly& a() const { return a_; }
  const UniPoly& b() const { return b_; }
  const UniPoly& modulus() const { return q_; }
  bool in_base_ring() const { return b_.is_zero(); }

  ExtPoly& operator+=(const ExtPoly& o);
  ExtPoly& operator-=(const ExtPoly& o);
  ExtPoly& operator*=(const BigInt& c);

  friend ExtPoly operator+(ExtPoly x, const ExtPoly& y) { return x += y; }
  friend ExtPoly operator-(ExtPoly x, const ExtPoly& y) { return x -= y; }
  friend ExtPoly operator-(ExtPoly x) { return x *= BigInt(-1); }
  friend ExtPoly operator*(ExtPoly x, const BigInt& c) { return x *= c; }
  friend ExtPoly operator*(const BigInt& c, ExtPoly x) { return x *= c; }
  /// (a1 + b1 s)(a2 + b2 s) = (a1 a2 + b1 b2 q) + (a1 b2 + a2 b1) s
  friend ExtPoly operator*(const ExtPoly& x, const ExtPoly& y);

  /// Throws ModulusMismatch when the moduli differ.
  friend bool operator==(const ExtPoly& x, const ExtPoly& y);

 private:
  void require_same_modulus(const ExtPoly& o) const;

  UniPoly a_, b_, q_;
};

ExtPoly ext_mul(const ExtPoly& x, const ExtPoly& y);
ExtPoly pow(const ExtPoly& x, unsigned long e);

/// p evaluated at `at` by Horner's rule.
ExtPoly evaluate(const UniPoly& p, const ExtPoly& at);

/// "a + (b)*s" style rendering for reports.
std::string to_string(const ExtPoly& x, std::string_view var = "x", std::string_view root = "s");

}  // namespace cfgcalc::quadext
