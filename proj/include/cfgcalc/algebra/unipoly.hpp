#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cfgcalc/algebra/bigint.hpp"
#include "cfgcalc/algebra/multipoly.hpp"

namespace cfgcalc::algebra {

/// Dense univariate polynomial c[0] + c[1]*x + ... with no trailing zeros.
/// C is BigInt or Rational.
template <class C>
class BasicUniPoly {
 public:
  BasicUniPoly() = default;
  explicit BasicUniPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static BasicUniPoly constant(const C& v) { return BasicUniPoly(std::vector<C>{v}); }
  static BasicUniPoly monomial(const C& v, std::size_t degree) {
    std::vector<C> c(degree + 1, C(0));
    c[degree] = v;
    return BasicUniPoly(std::move(c));
  }
  static BasicUniPoly x() { return monomial(C(1), 1); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }

  BasicUniPoly& operator+=(const BasicUniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  BasicUniPoly& operator-=(const BasicUniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  BasicUniPoly& operator*=(const C& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend BasicUniPoly operator+(BasicUniPoly a, const BasicUniPoly& b) { return a += b; }
  friend BasicUniPoly operator-(BasicUniPoly a, const BasicUniPoly& b) { return a -= b; }
  friend BasicUniPoly operator-(BasicUniPoly a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend BasicUniPoly operator*(BasicUniPoly a, const C& s) { return a *= s; }
  friend BasicUniPoly operator*(const C& s, BasicUniPoly a) { return a *= s; }
  friend BasicUniPoly operator*(const BasicUniPoly& a, const BasicUniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return BasicUniPoly(std::move(out));
  }
  BasicUniPoly& operator*=(const BasicUniPoly& o) { return *this = *this * o; }

  friend bool operator==(const BasicUniPoly&, const BasicUniPoly&) = default;

  BasicUniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<C> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * C(static_cast<long>(i));
    return BasicUniPoly(std::move(out));
  }

  /// p(-x)
  BasicUniPoly reflect() const {
    BasicUniPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
  }

  C operator()(const C& at) const {
    C acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<C> c_;
};

using UniPoly = BasicUniPoly<BigInt>;
using RatUniPoly = BasicUniPoly<Rational>;

template <class C>
BasicUniPoly<C> pow(const BasicUniPoly<C>& p, unsigned long e) {
  BasicUniPoly<C> result = BasicUniPoly<C>::constant(C(1));
  BasicUniPoly<C> base = p;
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

/// Canonical text in the same term format as MultiPoly.
std::string to_string(const UniPoly& p, std::string_view var = "x");

RatUniPoly to_rational(const UniPoly& p);
/// nullopt if some coefficient is not an integer.
std::optional<UniPoly> to_integral(const RatUniPoly& p);

/// Embeds p as a polynomial in `letter` over `alphabet`.
MultiPoly to_multipoly(const UniPoly& p, const Alphabet& alphabet, std::string_view letter);

/// Reads p as a polynomial in `letter` alone. Throws AlphabetError if any
/// other letter occurs with a nonzero exponent.
UniPoly to_unipoly(const MultiPoly& p, std::string_view letter);

}  // namespace cfgcalc::algebra
