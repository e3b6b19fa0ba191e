#include "cfgcalc/grammar/grammar.hpp"

#include <stdexcept>

namespace cfgcalc::grammar {

using algebra::AlphabetError;
using algebra::Monomial;

Grammar::Grammar(Alphabet alphabet, std::vector<MultiPoly> rules)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)) {
  if (rules_.size() != alphabet_.size())
    throw AlphabetError("grammar needs exactly one rule per letter");
  for (const auto& r : rules_)
    if (!(r.alphabet() == alphabet_))
      throw AlphabetError("rule right-hand side is over a different alphabet");
}

const MultiPoly& Grammar::rule(std::string_view letter) const {
  return rules_[alphabet_.index_of(letter)];
}

std::string to_string(const Grammar& g) {
  std::string out;
  for (std::size_t i = 0; i < g.alphabet().size(); ++i) {
    if (i != 0) out += "; ";
    out += g.alphabet().name(i) + " -> " + algebra::to_string(g.rules()[i]);
  }
  return out;
}

MultiPoly apply_D(const Grammar& g, const MultiPoly& p) {
  if (!(p.alphabet() == g.alphabet()))
    throw AlphabetError("polynomial alphabet does not match grammar alphabet");
  MultiPoly out(g.alphabet());
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      // d/dx_i of c*m, times rule(x_i)
      const MultiPoly lowered = MultiPoly::term(g.alphabet(), m.with(i, m[i] - 1), c * m[i]);
      out += lowered * g.rules()[i];
    }
  }
  return out;
}

OperatorExpr OperatorExpr::parse(std::string_view text) {
  if (text == "D") return derivative();
  auto weighted = [&](std::string_view prefix) -> std::string {
    std::string w(text.substr(prefix.size()));
    if (!algebra::is_valid_letter_name(w))
      throw std::invalid_argument("invalid weight letter in operator '" + std::string(text) + "'");
    return w;
  };
  if (text.starts_with("preD:")) return pre_multiply(weighted("preD:"));
  if (text.starts_with("postD:")) return post_multiply(weighted("postD:"));
  throw std::invalid_argument("unknown operator '" + std::string(text) +
                              "' (expected D, preD:<letter> or postD:<letter>)");
}

std::string to_string(const OperatorExpr& op) {
  switch (op.kind()) {
    case OperatorExpr::Kind::Derivative: return "D";
    case OperatorExpr::Kind::PreMultiply: return "preD:" + op.weight();
    case OperatorExpr::Kind::PostMultiply: return "postD:" + op.weight();
  }
  return {};
}

void check_operator(const Grammar& g, const OperatorExpr& op) {
  if (op.kind() != OperatorExpr::Kind::Derivative && !g.alphabet().contains(op.weight()))
    throw AlphabetError("operator weight '" + op.weight() + "' is not a grammar letter");
}

MultiPoly apply(const Grammar& g, const OperatorExpr& op, const MultiPoly& p) {
  switch (op.kind()) {
    case OperatorExpr::Kind::Derivative:
      return apply_D(g, p);
    case OperatorExpr::Kind::PreMultiply:
      return apply_D(g, MultiPoly::letter(g.alphabet(), op.weight()) * p);
    case OperatorExpr::Kind::PostMultiply:
      return MultiPoly::letter(g.alphabet(), op.weight()) * apply_D(g, p);
  }
  throw std::logic_error("unhandled operator kind");
}

MultiPoly iterate_operator(const Grammar& g, const OperatorExpr& op,
                           const MultiPoly& start, std::size_t n) {
  check_operator(g, op);
  if (!(start.alphabet() == g.alphabet()))
    throw AlphabetError("start polynomial alphabet does not match grammar alphabet");
  MultiPoly p = start;
  for (std::size_t i = 0; i < n; ++i) p = apply(g, op, p);
  return p;
}

OperatorOrbit::OperatorOrbit(Grammar g, OperatorExpr op, MultiPoly start)
    : grammar_(std::move(g)), op_(std::move(op)) {
  check_operator(grammar_, op_);
  if (!(start.alphabet() == grammar_.alphabet()))
    throw AlphabetError("start polynomial alphabet does not match grammar alphabet");
  iterates_.push_back(std::move(start));
}

const MultiPoly& OperatorOrbit::operator[](std::size_t n) {
  while (iterates_.size() <= n) iterates_.push_back(apply(grammar_, op_, iterates_.back()));
  return iterates_[n];
}

}  // namespace cfgcalc::grammar
