#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfgcalc/algebra/bigint.hpp"
#include "cfgcalc/grammar/grammar.hpp"
#include "cfgcalc/report.hpp"

namespace cfgcalc::grammar {

using algebra::BigInt;
using algebra::Monomial;

/// Raised when a polynomial has a term outside the expected monomial family.
class PatternMismatch : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// One-parameter family of monomials: exponent of letter i at index k is
/// base[i] + k*step[i]. The family must be bounded, i.e. some exponent
/// decreases with k, so it has finitely many members.
class MonomialFamily {
 public:
  struct LetterPattern {
    std::string letter;
    long base;
    long step;
  };

  /// Letters not mentioned have base 0 and step 0.
  MonomialFamily(const Alphabet& alphabet, const std::vector<LetterPattern>& patterns);

  /// Largest k for which every exponent is nonnegative; -1 if none is.
  long max_index() const { return max_index_; }
  Monomial member(long k) const;
  /// The k with member(k) == m, if any.
  std::optional<long> index_of(const Monomial& m) const;

 private:
  std::vector<long> base_;
  std::vector<long> step_;
  long max_index_;
};

/// Coefficients of p on member(0..max_index). Throws PatternMismatch if p
/// has a term outside the family.
std::vector<BigInt> expansion_coefficients(const MultiPoly& p, const MonomialFamily& family);

/// A claimed closed form op^n(start) = normalization(n) * sum_k coefficient(n,k) * family(n)[k].
struct GrammarIdentity {
  std::string name;
  Grammar grammar;
  OperatorExpr op;
  MultiPoly start;
  std::function<MonomialFamily(long n)> family;
  std::function<BigInt(long n, long k)> coefficient;
  std::function<BigInt(long n)> normalization;
};

/// Checks the identity for n_min <= n <= n_max. Every n is checked even after
/// a failure; each failing n records its first mismatching k.
VerificationReport verify_identity(const GrammarIdentity& identity, long n_max, long n_min = 1);

}  // namespace cfgcalc::grammar
