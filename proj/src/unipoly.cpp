#include "cfgcalc/algebra/unipoly.hpp"

namespace cfgcalc::algebra {

std::string to_string(const UniPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const BigInt& c = p.coeffs()[i];
    if (c == 0) continue;
    if (i == 0) {
      detail::append_term(out, c, {}, first);
    } else {
      const std::pair<std::string_view, unsigned long> pw{var, i};
      detail::append_term(out, c, {&pw, 1}, first);
    }
    first = false;
  }
  return out;
}

RatUniPoly to_rational(const UniPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatUniPoly(std::move(c));
}

std::optional<UniPoly> to_integral(const RatUniPoly& p) {
  std::vector<BigInt> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) {
    if (v.get_den() != 1) return std::nullopt;
    c.push_back(v.get_num());
  }
  return UniPoly(std::move(c));
}

MultiPoly to_multipoly(const UniPoly& p, const Alphabet& alphabet, std::string_view letter) {
  const std::size_t x = alphabet.index_of(letter);
  MultiPoly out(alphabet);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    out.add_term(Monomial(alphabet.size()).with(x, static_cast<unsigned>(i)), p.coeffs()[i]);
  return out;
}

UniPoly to_unipoly(const MultiPoly& p, std::string_view letter) {
  const auto x = p.alphabet().find(letter);
  std::vector<BigInt> c;
  for (const auto& [m, v] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0 && (!x || i != *x))
        throw AlphabetError("polynomial " + to_string(p) + " is not univariate in '" +
                            std::string(letter) + "'");
    const std::size_t e = x ? m[*x] : 0;
    if (c.size() <= e) c.resize(e + 1, BigInt(0));
    c[e] = v;
  }
  return UniPoly(std::move(c));
}

}  // namespace cfgcalc::algebra
