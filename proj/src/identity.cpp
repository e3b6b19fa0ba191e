#include "cfgcalc/grammar/identity.hpp"

#include <limits>

namespace cfgcalc::grammar {

MonomialFamily::MonomialFamily(const Alphabet& alphabet,
                               const std::vector<LetterPattern>& patterns)
    : base_(alphabet.size(), 0), step_(alphabet.size(), 0) {
  for (const auto& p : patterns) {
    const std::size_t i = alphabet.index_of(p.letter);
    base_[i] = p.base;
    step_[i] = p.step;
  }
  long hi = std::numeric_limits<long>::max();
  bool bounded = false;
  for (std::size_t i = 0; i < base_.size(); ++i) {
    if (step_[i] < 0) {
      bounded = true;
      hi = std::min(hi, base_[i] >= 0 ? base_[i] / -step_[i] : -1L);
    } else if (base_[i] < 0) {
      hi = -1;  // negative exponent at k = 0 that never recovers downward
    }
  }
  if (!bounded) throw std::invalid_argument("monomial family is unbounded");
  max_index_ = hi;
}

Monomial MonomialFamily::member(long k) const {
  std::vector<Monomial::Exponent> e(base_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const long v = base_[i] + k * step_[i];
    if (v < 0) throw std::out_of_range("family index outside its range");
    e[i] = static_cast<Monomial::Exponent>(v);
  }
  return Monomial(std::move(e));
}

std::optional<long> MonomialFamily::index_of(const Monomial& m) const {
  if (m.size() != base_.size()) return std::nullopt;
  std::optional<long> k;
  for (std::size_t i = 0; i < base_.size(); ++i) {
    const long e = static_cast<long>(m[i]);
    if (step_[i] == 0) {
      if (e != base_[i]) return std::nullopt;
      continue;
    }
    const long diff = e - base_[i];
    if (diff % step_[i] != 0) return std::nullopt;
    const long ki = diff / step_[i];
    if (ki < 0 || (k && *k != ki)) return std::nullopt;
    k = ki;
  }
  if (!k || *k > max_index_) return std::nullopt;
  return k;
}

std::vector<BigInt> expansion_coefficients(const MultiPoly& p, const MonomialFamily& family) {
  std::vector<BigInt> out(static_cast<std::size_t>(family.max_index() + 1), BigInt(0));
  for (const auto& [m, c] : p.terms()) {
    const auto k = family.index_of(m);
    if (!k)
      throw PatternMismatch("term " + algebra::to_string(MultiPoly::term(p.alphabet(), m, c)) +
                            " lies outside the expected monomial family");
    out[static_cast<std::size_t>(*k)] = c;
  }
  return out;
}

VerificationReport verify_identity(const GrammarIdentity& identity, long n_max, long n_min) {
  VerificationReport report(identity.name);
  OperatorOrbit orbit(identity.grammar, identity.op, identity.start);
  for (long n = n_min; n <= n_max; ++n) {
    const MultiPoly& value = orbit[static_cast<std::size_t>(n)];
    std::vector<BigInt> actual;
    try {
      actual = expansion_coefficients(value, identity.family(n));
    } catch (const PatternMismatch& e) {
      report.fail(identity.name, n, e.what());
      continue;
    }
    const BigInt scale = identity.normalization(n);
    std::optional<Mismatch> first;
    for (long k = 0; k < static_cast<long>(actual.size()) && !first; ++k) {
      const BigInt expected = scale * identity.coefficient(n, k);
      if (expected != actual[static_cast<std::size_t>(k)])
        first = Mismatch{k, expected, actual[static_cast<std::size_t>(k)]};
    }
    if (first) {
      report.fail(identity.name, n,
                  "k=" + std::to_string(first->k) + ": expected " + first->expected.get_str() +
                      ", got " + first->actual.get_str(),
                  first);
    } else {
      report.pass(identity.name, n, std::to_string(value.size()) + " terms");
    }
  }
  return report;
}

}  // namespace cfgcalc::grammar
