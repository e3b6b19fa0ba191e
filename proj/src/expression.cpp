#include "cfgcalc/algebra/expression.hpp"

#include <cctype>

namespace cfgcalc::algebra {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto push = [&](Token::Kind k, std::string s, std::size_t c) {
    out.push_back(Token{k, std::move(s), line, c});
  };
  while (i < text.size()) {
    const char ch = text[i];
    const std::size_t start_col = col;
    if (ch == '\n') {
      push(Token::Kind::Separator, "\\n", start_col);
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      ++col;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      push(Token::Kind::Ident, std::string(text.substr(i, j - i)), start_col);
      col += j - i;
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Token::Kind::Integer, std::string(text.substr(i, j - i)), start_col);
      col += j - i;
      i = j;
      continue;
    }
    if (ch == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      push(Token::Kind::Arrow, "->", start_col);
      i += 2;
      col += 2;
      continue;
    }
    Token::Kind k;
    switch (ch) {
      case '+': k = Token::Kind::Plus; break;
      case '-': k = Token::Kind::Minus; break;
      case '*': k = Token::Kind::Star; break;
      case '^': k = Token::Kind::Caret; break;
      case '(': k = Token::Kind::LParen; break;
      case ')': k = Token::Kind::RParen; break;
      case ';': k = Token::Kind::Separator; break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", line, col);
    }
    push(k, std::string(1, ch), start_col);
    ++i;
    ++col;
  }
  push(Token::Kind::End, "", col);
  return out;
}

namespace {

constexpr unsigned long kMaxExponent = 4096;

class ExpressionParser {
 public:
  ExpressionParser(std::span<const Token> tokens, const Alphabet& alphabet)
      : tokens_(tokens), alphabet_(alphabet) {}

  MultiPoly parse_all() {
    MultiPoly p = expr();
    const Token& t = peek();
    if (t.kind != Token::Kind::End && t.kind != Token::Kind::Separator)
      fail("unexpected '" + t.text + "'", t);
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Token::Kind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] static void fail(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.column);
  }
  static std::string describe(const Token& t) {
    if (t.kind == Token::Kind::End) return "end of input";
    if (t.kind == Token::Kind::Separator) return "end of rule";
    return "'" + t.text + "'";
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept(Token::Kind::Plus)) {
        acc += term();
      } else if (accept(Token::Kind::Minus)) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept(Token::Kind::Star)) acc *= factor();
    return acc;
  }

  MultiPoly factor() {
    if (accept(Token::Kind::Minus)) return -factor();
    if (accept(Token::Kind::Plus)) return factor();
    MultiPoly base = primary();
    if (accept(Token::Kind::Caret)) {
      const Token& t = next();
      if (t.kind != Token::Kind::Integer)
        fail("expected a nonnegative integer exponent, found " + describe(t), t);
      if (t.text.size() > 6 || std::stoul(t.text) > kMaxExponent)
        fail("exponent " + t.text + " exceeds " + std::to_string(kMaxExponent), t);
      return pow(base, std::stoul(t.text));
    }
    return base;
  }

  MultiPoly primary() {
    const Token& t = next();
    switch (t.kind) {
      case Token::Kind::Integer:
        return MultiPoly::constant(alphabet_, BigInt(t.text, 10));
      case Token::Kind::Ident:
        if (!alphabet_.contains(t.text)) fail("undeclared letter '" + t.text + "'", t);
        return MultiPoly::letter(alphabet_, t.text);
      case Token::Kind::LParen: {
        MultiPoly inner = expr();
        const Token& close = next();
        if (close.kind != Token::Kind::RParen)
          fail("expected ')', found " + describe(close), close);
        return inner;
      }
      default:
        fail("expected a number, letter or '(', found " + describe(t), t);
    }
  }

  std::span<const Token> tokens_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_expression(std::span<const Token> tokens, const Alphabet& alphabet) {
  if (tokens.empty() || (tokens.back().kind != Token::Kind::End &&
                         tokens.back().kind != Token::Kind::Separator))
    throw std::invalid_argument("token range must end with a terminator");
  return ExpressionParser(tokens, alphabet).parse_all();
}

MultiPoly parse_poly(std::string_view text, const Alphabet& alphabet) {
  const auto tokens = tokenize(text);
  for (const auto& t : tokens)
    if (t.kind == Token::Kind::Separator || t.kind == Token::Kind::Arrow)
      throw ParseError("unexpected '" + t.text + "' in expression", t.line, t.column);
  return parse_expression(tokens, alphabet);
}

}  // namespace cfgcalc::algebra
