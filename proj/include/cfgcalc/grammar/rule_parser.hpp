#pragma once

#include <string_view>

#include "cfgcalc/algebra/expression.hpp"
#include "cfgcalc/grammar/grammar.hpp"

namespace cfgcalc::grammar {

using algebra::ParseError;

/// Parses the rule language:
///
///   rules    := rule ((';' | newline) rule)*
///   rule     := IDENT '->' polyexpr
///
/// Letters are declared by appearing on a left-hand side, in order. Every
/// letter used on a right-hand side needs its own rule. Empty rules (blank
/// lines, doubled separators) are skipped. Throws ParseError on syntax
/// errors, duplicate rules and undeclared letters.
Grammar parse_grammar(std::string_view text);

}  // namespace cfgcalc::grammar
