#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cfgcalc/algebra/multipoly.hpp"

namespace cfgcalc::algebra {

/// Syntax or name-resolution error at a 1-based line/column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

struct Token {
  enum class Kind { Ident, Integer, Plus, Minus, Star, Caret, LParen, RParen, Arrow, Separator, End };
  Kind kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

/// Splits text into tokens. ';' and newlines become Separator tokens; the
/// sequence always ends with a single End token.
std::vector<Token> tokenize(std::string_view text);

/// Parses a polynomial expression occupying the whole token range. The range
/// must be terminated by a Separator or End token, which is where trailing
/// garbage is reported. Letters must belong to `alphabet`.
MultiPoly parse_expression(std::span<const Token> tokens, const Alphabet& alphabet);

/// Parses `+ - * ^`, integer literals, parentheses and letters of `alphabet`.
MultiPoly parse_poly(std::string_view text, const Alphabet& alphabet);

}  // namespace cfgcalc::algebra
