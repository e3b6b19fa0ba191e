#include "cfgcalc/gamma/gamma.hpp"

#include <string>

#include "cfgcalc/numbers/triangles.hpp"

namespace cfgcalc::gamma {

using algebra::binomial;

HPoly::HPoly(std::vector<BigInt> h, long bound) : coeffs(std::move(h)), d(bound) {
  if (bound < 0) throw std::invalid_argument("h-polynomial degree bound must be >= 0");
  if (static_cast<long>(coeffs.size()) > d + 1) {
    for (auto i = static_cast<std::size_t>(d + 1); i < coeffs.size(); ++i)
      if (coeffs[i] != 0)
        throw std::invalid_argument("h-polynomial has a nonzero coefficient beyond x^" +
                                    std::to_string(d));
  }
  coeffs.resize(static_cast<std::size_t>(d + 1), BigInt(0));
}

HPoly::HPoly(std::vector<BigInt> h)
    : HPoly(h, h.empty() ? 0 : static_cast<long>(h.size()) - 1) {}

bool HPoly::palindromic() const {
  for (long i = 0; i <= d; ++i)
    if (coeffs[static_cast<std::size_t>(i)] != coeffs[static_cast<std::size_t>(d - i)]) return false;
  return true;
}

GammaVector::GammaVector(std::vector<BigInt> g, long bound) : gammas(std::move(g)), d(bound) {
  if (bound < 0) throw std::invalid_argument("gamma-vector degree bound must be >= 0");
  const auto len = static_cast<std::size_t>(d / 2 + 1);
  if (gammas.size() > len)
    for (std::size_t i = len; i < gammas.size(); ++i)
      if (gammas[i] != 0) throw std::invalid_argument("gamma-vector longer than floor(d/2)+1");
  gammas.resize(len, BigInt(0));
}

namespace {

// Adds scale * x^i (1+x)^(d-2i) into h.
void add_basis(std::vector<BigInt>& h, const BigInt& scale, long i, long d) {
  const long m = d - 2 * i;
  for (long j = 0; j <= m; ++j) h[static_cast<std::size_t>(i + j)] += scale * binomial(m, j);
}

}  // namespace

HPoly gamma_to_h(const GammaVector& g) {
  std::vector<BigInt> h(static_cast<std::size_t>(g.d + 1), BigInt(0));
  for (std::size_t i = 0; i < g.gammas.size(); ++i)
    if (g.gammas[i] != 0) add_basis(h, g.gammas[i], static_cast<long>(i), g.d);
  return HPoly(std::move(h), g.d);
}

GammaVector h_to_gamma(const HPoly& h) {
  if (!h.palindromic())
    throw NotPalindromic("h-polynomial is not palindromic about d/2 (d=" + std::to_string(h.d) + ")");
  std::vector<BigInt> residual = h.coeffs;
  std::vector<BigInt> g;
  for (long i = 0; i <= h.d / 2; ++i) {
    const BigInt gi = residual[static_cast<std::size_t>(i)];
    g.push_back(gi);
    if (gi != 0) add_basis(residual, -gi, i, h.d);
  }
  return GammaVector(std::move(g), h.d);
}

namespace {

HPoly row_poly(long n, long d, BigInt (*entry)(long, long)) {
  if (n < 1) throw std::domain_error("family index n must be >= 1");
  std::vector<BigInt> h;
  for (long k = 0; k <= d; ++k) h.push_back(entry(n, k));
  return HPoly(std::move(h), d);
}

GammaVector gamma_row(long n, long d, BigInt (*entry)(long, long)) {
  if (n < 1) throw std::domain_error("family index n must be >= 1");
  std::vector<BigInt> g;
  for (long k = 0; k <= d / 2; ++k) g.push_back(entry(n, k));
  return GammaVector(std::move(g), d);
}

}  // namespace

HPoly coxeter_h(Family type, long n) {
  return type == Family::A ? row_poly(n, n - 1, numbers::eulerian_a)
                           : row_poly(n, n, numbers::eulerian_b);
}

HPoly associahedron_h(Family type, long n) {
  return type == Family::A ? row_poly(n, n - 1, numbers::narayana_h_a)
                           : row_poly(n, n, numbers::assoc_h_b);
}

GammaVector coxeter_gamma(Family type, long n) {
  return type == Family::A ? gamma_row(n, n - 1, numbers::gamma_a)
                           : gamma_row(n, n, numbers::gamma_b);
}

GammaVector associahedron_gamma(Family type, long n) {
  return type == Family::A ? gamma_row(n, n - 1, numbers::motzkin_F)
                           : gamma_row(n, n, numbers::central_H);
}

}  // namespace cfgcalc::gamma
