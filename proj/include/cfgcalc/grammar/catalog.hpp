#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cfgcalc/grammar/grammar.hpp"

namespace cfgcalc::grammar {

struct NamedGrammar {
  std::string name;
  std::string rules;  // rule-language source
  std::string description;
};

/// Built-in grammars, addressable by name from the command line.
const std::vector<NamedGrammar>& builtin_grammars();

/// Parses a built-in grammar by name; throws std::invalid_argument if unknown.
Grammar builtin_grammar(std::string_view name);

// Shorthands for the grammars used by the verification suite.
Grammar secant_tangent_grammar();   // f -> f*g; g -> 4*f^2
Grammar eulerian_grammar();         // y -> z^2; z -> y*z
Grammar associahedron_grammar();    // u -> u^2*v; v -> 4*u^3
Grammar chebyshev_grammar();        // u -> u^2*v; v -> u^3
Grammar gamma_a_grammar();          // u -> u*v; v -> 2*u
Grammar motzkin_grammar();          // t -> t*u^2; u -> u^2*v; v -> 4*u^3

}  // namespace cfgcalc::grammar
