#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cfgcalc/algebra/bigint.hpp"

namespace cfgcalc::algebra {

/// Raised on alphabet mismatch between operands or lookup of an unknown letter.
class AlphabetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the exponents of a letter do not share a single parity.
class ParityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Letter names start with an ASCII letter and continue alphanumerically.
bool is_valid_letter_name(std::string_view name);

/// Ordered set of letter names. Position in the declaration order is the
/// letter's index into every Monomial built over this alphabet.
class Alphabet {
 public:
  Alphabet();
  explicit Alphabet(std::vector<std::string> letters);
  Alphabet(std::initializer_list<std::string> letters);

  std::size_t size() const { return letters_->size(); }
  const std::vector<std::string>& letters() const { return *letters_; }
  const std::string& name(std::size_t i) const { return (*letters_)[i]; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws AlphabetError naming the letter if absent.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  /// This alphabet followed by the letters of `other` not already present.
  Alphabet union_with(const Alphabet& other) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b);

 private:
  std::shared_ptr<const std::vector<std::string>> letters_;
};

/// Dense exponent vector over an alphabet. The built-in ordering is graded
/// lexicographic: total degree first, then exponents compared left to right.
class Monomial {
 public:
  using Exponent = unsigned;

  explicit Monomial(std::size_t nvars = 0) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exps() const { return exps_; }
  unsigned long degree() const;
  bool is_unit() const { return degree() == 0; }

  Monomial with(std::size_t i, Exponent e) const;
  Monomial operator*(const Monomial& o) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Exponent> exps_;
};

/// Sparse polynomial with exact integer coefficients. No zero coefficient is
/// ever stored, so equality of term maps is equality of polynomials.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, BigInt>;

  explicit MultiPoly(Alphabet alphabet = Alphabet());

  static MultiPoly constant(const Alphabet& alphabet, const BigInt& c);
  static MultiPoly letter(const Alphabet& alphabet, std::string_view name);
  static MultiPoly term(const Alphabet& alphabet, Monomial m, const BigInt& c = 1);

  const Alphabet& alphabet() const { return alphabet_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  BigInt coefficient(const Monomial& m) const;

  /// Accumulates c*m; a resulting zero coefficient is erased.
  void add_term(const Monomial& m, const BigInt& c);

  /// Same polynomial over `target`, which must contain every letter that
  /// occurs with a nonzero exponent.
  MultiPoly rebase(const Alphabet& target) const;

  /// Largest exponent of the given letter (0 for the zero polynomial).
  Monomial::Exponent degree_in(std::size_t letter) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const BigInt& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const BigInt& c) { return a *= c; }
  friend MultiPoly operator*(const BigInt& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(MultiPoly a);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void require_same_alphabet(const MultiPoly& o, const char* op) const;

  Alphabet alphabet_;
  TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned long e);

MultiPoly partial_derivative(const MultiPoly& p, std::string_view letter);

/// Replaces every occurrence of `letter` by `r`. The result lives over the
/// union of both alphabets (p's letters first).
MultiPoly substitute(const MultiPoly& p, std::string_view letter, const MultiPoly& r);

struct ParitySubstitution {
  int parity = 0;  // exponent parity shared by every term, 0 or 1
  MultiPoly reduced;
};

/// Writes letter^(2m+e) as letter^e * (letter^2)^m and replaces letter^2 by
/// `r`. The leftover letter^e is reported through `parity`, not kept in the
/// result. Throws ParityError if the letter's exponents have mixed parity.
ParitySubstitution substitute_square_with_parity(const MultiPoly& p,
                                                 std::string_view letter,
                                                 const MultiPoly& r);

/// Divides out letter^e; throws std::domain_error if some term is not divisible.
MultiPoly divide_by_letter_power(const MultiPoly& p, std::string_view letter,
                                 Monomial::Exponent e);

using Assignment = std::map<std::string, Rational, std::less<>>;

/// Exact evaluation. Throws AlphabetError if a letter that occurs in p has
/// no assigned value.
Rational eval_rational(const MultiPoly& p, const Assignment& values);

/// Canonical text: graded-lex ascending, `coeff*x^e*y^f`, unit coefficients
/// and exponents elided, "0" for the zero polynomial.
std::string to_string(const MultiPoly& p);
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

namespace detail {
// Appends one term in canonical form; `first` suppresses the " + " joiner.
void append_term(std::string& out, const BigInt& coeff,
                 std::span<const std::pair<std::string_view, unsigned long>> powers,
                 bool first);
}  // namespace detail

}  // namespace cfgcalc::algebra
