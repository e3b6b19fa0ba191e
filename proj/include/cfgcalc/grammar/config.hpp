#pragma once

#include <string_view>
#include <vector>

#include "cfgcalc/grammar/catalog.hpp"

namespace cfgcalc::grammar {

/// Reads a grammar config file:
///
///   # comment
///   [name]
///   u -> u*v
///   v -> 4*u^2
///
/// Each section body is rule-language text. Every section is parsed eagerly;
/// ParseError line numbers refer to the whole file.
std::vector<NamedGrammar> parse_grammar_config(std::string_view text);

/// Throws std::invalid_argument if `name` has no section.
Grammar config_grammar(const std::vector<NamedGrammar>& config, std::string_view name);

}  // namespace cfgcalc::grammar
