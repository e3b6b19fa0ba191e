#include "cfgcalc/grammar/rule_parser.hpp"

#include <span>
#include <string>
#include <vector>

namespace cfgcalc::grammar {

using algebra::Token;

namespace {

struct RawRule {
  const Token* lhs;
  std::span<const Token> rhs;  // terminated by the separator/end token
};

}  // namespace

Grammar parse_grammar(std::string_view text) {
  const std::vector<Token> tokens = algebra::tokenize(text);
  std::vector<RawRule> raw;
  std::vector<std::string> letters;

  std::size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i].kind == Token::Kind::Separator) {
      ++i;
      continue;
    }
    if (tokens[i].kind == Token::Kind::End) break;

    const Token& lhs = tokens[i];
    if (lhs.kind != Token::Kind::Ident)
      throw ParseError("expected a letter at the start of a rule, found '" + lhs.text + "'",
                       lhs.line, lhs.column);
    const Token& arrow = tokens[i + 1];
    if (arrow.kind != Token::Kind::Arrow)
      throw ParseError("expected '->' after '" + lhs.text + "'", arrow.line, arrow.column);
    for (const auto& l : letters)
      if (l == lhs.text)
        throw ParseError("duplicate rule for letter '" + lhs.text + "'", lhs.line, lhs.column);
    letters.push_back(lhs.text);

    std::size_t j = i + 2;
    while (tokens[j].kind != Token::Kind::Separator && tokens[j].kind != Token::Kind::End) ++j;
    if (j == i + 2)
      throw ParseError("empty right-hand side for '" + lhs.text + "'", tokens[j].line,
                       tokens[j].column);
    raw.push_back({&lhs, std::span<const Token>(tokens).subspan(i + 2, j - i - 1)});
    i = j;
  }
  if (raw.empty()) {
    const Token& end = tokens.back();
    throw ParseError("grammar has no rules", end.line, end.column);
  }

  Alphabet alphabet(letters);
  std::vector<MultiPoly> rules;
  rules.reserve(raw.size());
  for (const auto& r : raw) rules.push_back(algebra::parse_expression(r.rhs, alphabet));
  return Grammar(std::move(alphabet), std::move(rules));
}

}  // namespace cfgcalc::grammar
