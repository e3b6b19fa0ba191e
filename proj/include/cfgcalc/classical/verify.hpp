#pragma once

#include "cfgcalc/report.hpp"

namespace cfgcalc::classical {

/// Under f -> f*g, g -> 4*f^2, substituting g = 2h and f^2 = 1 + h^2 gives
/// D^n(f) = 2^n f Q_n(h) and D^n(g) = 2^(n+1) P_n(h); checked for 0 <= n <= n_max.
VerificationReport verify_prop12(long n_max);

/// n! [t^n] of (u + tan t)/(1 - u tan t) and sec t/(1 - u tan t), built from
/// the sin/cos series, against P_n and Q_n for 0 <= n <= n_max.
VerificationReport verify_egf(long n_max);

/// Alternating permutation counts by exhaustive enumeration against the
/// tan+sec coefficients: E_n for n <= n_max_a and E_n^B = 2^n E_n for n <= n_max_b.
VerificationReport verify_alternating_egf(long n_max_a, long n_max_b);

}  // namespace cfgcalc::classical
