#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cfgcalc/algebra/bigint.hpp"
#include "cfgcalc/algebra/unipoly.hpp"

namespace cfgcalc::classical {

using algebra::Rational;
using algebra::RatUniPoly;

/// c_0 + c_1 t + ... + c_N t^N modulo t^(N+1). C must be a commutative ring
/// whose default value is zero (Rational, RatUniPoly).
template <class C>
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t order) : c_(order + 1) {}
  TruncSeries(std::size_t order, std::vector<C> coeffs) : c_(std::move(coeffs)) {
    c_.resize(order + 1);
  }

  std::size_t order() const { return c_.size() - 1; }
  const C& operator[](std::size_t i) const { return c_.at(i); }
  C& operator[](std::size_t i) { return c_.at(i); }

  TruncSeries& operator+=(const TruncSeries& o) {
    require_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    require_order(o);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    a.require_order(b);
    TruncSeries out(a.order());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; i + j < a.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    return out;
  }

  /// Multiplies every coefficient by s.
  template <class S>
  TruncSeries scaled(const S& s) const {
    TruncSeries out = *this;
    for (auto& v : out.c_) v = v * s;
    return out;
  }

  /// Multiplicative inverse; the caller supplies 1/c_0.
  TruncSeries inverse(const C& c0_inverse) const {
    TruncSeries out(order());
    out.c_[0] = c0_inverse;
    for (std::size_t n = 1; n < c_.size(); ++n) {
      C acc{};
      for (std::size_t j = 1; j <= n; ++j) acc += c_[j] * out.c_[n - j];
      out.c_[n] = -(c0_inverse * acc);
    }
    return out;
  }

 private:
  void require_order(const TruncSeries& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("series truncation orders differ");
  }

  std::vector<C> c_;
};

using RatSeries = TruncSeries<Rational>;
using PolySeries = TruncSeries<RatUniPoly>;

RatSeries sin_series(std::size_t order);
RatSeries cos_series(std::size_t order);
/// sin * (1/cos)
RatSeries tan_series(std::size_t order);
/// 1/cos
RatSeries sec_series(std::size_t order);

/// Series with constant-polynomial coefficients.
PolySeries lift(const RatSeries& s);

/// (u + tan t) / (1 - u tan t) as a series in t over Q[u].
PolySeries egf_P(std::size_t order);
/// sec t / (1 - u tan t)
PolySeries egf_Q(std::size_t order);

}  // namespace cfgcalc::classical
