#include "cfgcalc/quadext/ext_poly.hpp"

namespace cfgcalc::quadext {

ExtPoly::ExtPoly(UniPoly a, UniPoly b, UniPoly modulus)
    : a_(std::move(a)), b_(std::move(b)), q_(std::move(modulus)) {}

void ExtPoly::require_same_modulus(const ExtPoly& o) const {
  if (q_ != o.q_)
    throw ModulusMismatch("extension elements over different moduli: " +
                          algebra::to_string(q_) + " vs " + algebra::to_string(o.q_));
}

ExtPoly& ExtPoly::operator+=(const ExtPoly& o) {
  require_same_modulus(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

ExtPoly& ExtPoly::operator-=(const ExtPoly& o) {
  require_same_modulus(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

ExtPoly& ExtPoly::operator*=(const BigInt& c) {
  a_ *= c;
  b_ *= c;
  return *this;
}

ExtPoly operator*(const ExtPoly& x, const ExtPoly& y) {
  x.require_same_modulus(y);
  return ExtPoly(x.a_ * y.a_ + x.b_ * y.b_ * x.q_, x.a_ * y.b_ + y.a_ * x.b_, x.q_);
}

bool operator==(const ExtPoly& x, const ExtPoly& y) {
  x.require_same_modulus(y);
  return x.a_ == y.a_ && x.b_ == y.b_;
}

ExtPoly ext_mul(const ExtPoly& x, const ExtPoly& y) { return x * y; }

ExtPoly pow(const ExtPoly& x, unsigned long e) {
  ExtPoly result = ExtPoly::base(UniPoly::constant(1), x.modulus());
  ExtPoly base = x;
  while (e != 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

ExtPoly evaluate(const UniPoly& p, const ExtPoly& at) {
  ExtPoly acc = ExtPoly::base(UniPoly(), at.modulus());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * at + ExtPoly::base(UniPoly::constant(*it), at.modulus());
  return acc;
}

std::string to_string(const ExtPoly& x, std::string_view var, std::string_view root) {
  if (x.in_base_ring()) return algebra::to_string(x.a(), var);
  std::string s = "(" + algebra::to_string(x.b(), var) + ")*" + std::string(root);
  if (x.a().is_zero()) return s;
  return algebra::to_string(x.a(), var) + " + " + s;
}

}  // namespace cfgcalc::quadext
