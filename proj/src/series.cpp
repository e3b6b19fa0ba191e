#include "cfgcalc/classical/series.hpp"

namespace cfgcalc::classical {

using algebra::factorial;
using algebra::make_rational;

RatSeries sin_series(std::size_t order) {
  RatSeries s(order);
  for (std::size_t i = 1; i <= order; i += 2)
    s[i] = make_rational((i / 2) % 2 == 0 ? 1 : -1, factorial(i));
  return s;
}

RatSeries cos_series(std::size_t order) {
  RatSeries s(order);
  for (std::size_t i = 0; i <= order; i += 2)
    s[i] = make_rational((i / 2) % 2 == 0 ? 1 : -1, factorial(i));
  return s;
}

RatSeries sec_series(std::size_t order) { return cos_series(order).inverse(Rational(1)); }

RatSeries tan_series(std::size_t order) { return sin_series(order) * sec_series(order); }

PolySeries lift(const RatSeries& s) {
  PolySeries out(s.order());
  for (std::size_t i = 0; i <= s.order(); ++i) out[i] = RatUniPoly::constant(s[i]);
  return out;
}

namespace {

PolySeries one_minus_u_tan_inverse(std::size_t order) {
  const PolySeries tan = lift(tan_series(order));
  PolySeries denom(order);
  denom[0] = RatUniPoly::constant(Rational(1));
  denom -= tan.scaled(RatUniPoly::x());
  return denom.inverse(RatUniPoly::constant(Rational(1)));
}

}  // namespace

PolySeries egf_P(std::size_t order) {
  PolySeries num = lift(tan_series(order));
  num[0] += RatUniPoly::x();
  return num * one_minus_u_tan_inverse(order);
}

PolySeries egf_Q(std::size_t order) {
  return lift(sec_series(order)) * one_minus_u_tan_inverse(order);
}

}  // namespace cfgcalc::classical
