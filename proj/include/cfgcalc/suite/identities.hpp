#pragma once

#include <vector>

#include "cfgcalc/grammar/identity.hpp"

namespace cfgcalc::suite {

using grammar::GrammarIdentity;

/// D^n(f), D^n(g), (fD)^n(f), (fD)^n(g) under f -> f*g, g -> 4*f^2 against
/// the b, a, H and F triangles.
std::vector<GrammarIdentity> secant_tangent_identities();

/// (Dy)^n(y) and (Dy)^n(z) under y -> z^2, z -> y*z against the Eulerian
/// numbers of types A and B.
std::vector<GrammarIdentity> eulerian_identities();

/// D^n(uv) under u -> u^2*v, v -> 4*u^3.
GrammarIdentity associahedron_uv_identity();

/// D^n(uv) and D^n(u^2) under u -> u^2*v, v -> u^3 (binomial coefficients).
std::vector<GrammarIdentity> chebyshev_coefficient_identities();

/// D^n(u) under u -> u*v, v -> 2*u against a(n+1, k).
GrammarIdentity gamma_a_shifted_identity();

/// D^n(t^2 u^2) and D^n(t^2 u) under t -> t*u^2, u -> u^2*v, v -> 4*u^3.
std::vector<GrammarIdentity> motzkin_identities();

}  // namespace cfgcalc::suite
