#pragma once

// Randomized property checks shared by the unit tests and the acceptance run.
// Each check draws one case from the generator and returns an empty string on
// success, or a description of the counterexample.

#include <functional>
#include <string>

#include "support/random.hpp"

namespace cfgcalc::testing {

using Property = std::function<std::string(Rng&)>;

struct NamedProperty {
  std::string name;
  Property check;
};

std::string ring_axioms(Rng& rng);
std::string substitute_identity(Rng& rng);
std::string partial_leibniz(Rng& rng);
std::string print_parse_roundtrip(Rng& rng);
std::string json_roundtrip(Rng& rng);
std::string grammar_linearity(Rng& rng);
std::string grammar_leibniz(Rng& rng);
std::string weighted_operator_step(Rng& rng);
std::string square_parity(Rng& rng);
std::string gamma_palindromic(Rng& rng);
std::string gamma_roundtrip(Rng& rng);
std::string non_palindromic_rejected(Rng& rng);
std::string ext_ring_axioms(Rng& rng);
std::string ext_perfect_square(Rng& rng);
std::string unipoly_reflect(Rng& rng);

const std::vector<NamedProperty>& all_properties();

// Runs `cases` draws; returns the first failure or an empty string.
std::string run_property(const NamedProperty& p, Rng& rng, long cases);

}  // namespace cfgcalc::testing
