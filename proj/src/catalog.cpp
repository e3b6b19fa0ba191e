#include "cfgcalc/grammar/catalog.hpp"

#include <stdexcept>

#include "cfgcalc/grammar/rule_parser.hpp"

namespace cfgcalc::grammar {

const std::vector<NamedGrammar>& builtin_grammars() {
  static const std::vector<NamedGrammar> all = {
      {"example", "u -> u*v; v -> v", "D^n(u) expands into Stirling-type sums"},
      {"g1", "u -> u*v; v -> 4*u^2", "Coxeter gamma-vectors of types A and B"},
      {"g2", "u -> u^2*v; v -> 4*u^3", "associahedron gamma-vectors of types A and B"},
      {"secant-tangent", "f -> f*g; g -> 4*f^2", "f = sec 2x, g = 2 tan 2x"},
      {"eulerian", "y -> z^2; z -> y*z", "Eulerian polynomials of types A and B via (Dy)"},
      {"chebyshev", "u -> u^2*v; v -> u^3", "Chebyshev polynomials of both kinds"},
      {"gamma-a", "u -> u*v; v -> 2*u", "type-A Coxeter gamma-vectors, shifted"},
      {"motzkin", "t -> t*u^2; u -> u^2*v; v -> 4*u^3", "Motzkin left factors and cube f-vectors"},
  };
  return all;
}

Grammar builtin_grammar(std::string_view name) {
  for (const auto& g : builtin_grammars())
    if (g.name == name) return parse_grammar(g.rules);
  throw std::invalid_argument("unknown built-in grammar '" + std::string(name) + "'");
}

Grammar secant_tangent_grammar() { return builtin_grammar("secant-tangent"); }
Grammar eulerian_grammar() { return builtin_grammar("eulerian"); }
Grammar associahedron_grammar() { return builtin_grammar("g2"); }
Grammar chebyshev_grammar() { return builtin_grammar("chebyshev"); }
Grammar gamma_a_grammar() { return builtin_grammar("gamma-a"); }
Grammar motzkin_grammar() { return builtin_grammar("motzkin"); }

}  // namespace cfgcalc::grammar
