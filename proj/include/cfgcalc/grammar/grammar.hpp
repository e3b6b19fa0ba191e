#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cfgcalc/algebra/multipoly.hpp"

namespace cfgcalc::grammar {

using algebra::Alphabet;
using algebra::MultiPoly;

/// A context-free grammar in Chen's sense: one substitution rule per letter.
/// The rule for a letter is the value of the formal derivative D on it.
class Grammar {
 public:
  /// rules[i] is the right-hand side for alphabet letter i and must be a
  /// polynomial over the same alphabet.
  Grammar(Alphabet alphabet, std::vector<MultiPoly> rules);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<MultiPoly>& rules() const { return rules_; }
  const MultiPoly& rule(std::string_view letter) const;

  friend bool operator==(const Grammar&, const Grammar&) = default;

 private:
  Alphabet alphabet_;
  std::vector<MultiPoly> rules_;
};

/// "u -> u*v; v -> 4*u^2"
std::string to_string(const Grammar& g);

/// D(p) = sum over letters x of rule(x) * dp/dx.
MultiPoly apply_D(const Grammar& g, const MultiPoly& p);

/// One of the three operator shapes iterated in this library:
///   D                  p -> D(p)
///   pre-multiply  w    p -> D(w*p)     e.g. (Dy)
///   post-multiply w    p -> w*D(p)     e.g. (fD)
class OperatorExpr {
 public:
  enum class Kind { Derivative, PreMultiply, PostMultiply };

  static OperatorExpr derivative() { return OperatorExpr(Kind::Derivative, {}); }
  static OperatorExpr pre_multiply(std::string weight) {
    return OperatorExpr(Kind::PreMultiply, std::move(weight));
  }
  static OperatorExpr post_multiply(std::string weight) {
    return OperatorExpr(Kind::PostMultiply, std::move(weight));
  }

  /// Accepts "D", "preD:<letter>" and "postD:<letter>".
  static OperatorExpr parse(std::string_view text);

  Kind kind() const { return kind_; }
  const std::string& weight() const { return weight_; }

  friend bool operator==(const OperatorExpr&, const OperatorExpr&) = default;

 private:
  OperatorExpr(Kind kind, std::string weight) : kind_(kind), weight_(std::move(weight)) {}

  Kind kind_;
  std::string weight_;
};

std::string to_string(const OperatorExpr& op);

/// Throws AlphabetError if the operator's weight letter is not in g.
void check_operator(const Grammar& g, const OperatorExpr& op);

MultiPoly apply(const Grammar& g, const OperatorExpr& op, const MultiPoly& p);

/// op applied n times to start; n == 0 returns start.
MultiPoly iterate_operator(const Grammar& g, const OperatorExpr& op,
                           const MultiPoly& start, std::size_t n);

/// Memoized orbit start, op(start), op^2(start), ... so that sweeping n
/// costs one operator application per step.
class OperatorOrbit {
 public:
  OperatorOrbit(Grammar g, OperatorExpr op, MultiPoly start);

  const MultiPoly& operator[](std::size_t n);
  std::size_t computed() const { return iterates_.size(); }

 private:
  Grammar grammar_;
  OperatorExpr op_;
  std::vector<MultiPoly> iterates_;
};

}  // namespace cfgcalc::grammar
