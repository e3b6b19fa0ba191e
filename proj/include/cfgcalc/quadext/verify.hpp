#pragma once

#include "cfgcalc/report.hpp"

namespace cfgcalc::quadext {

/// a_n and b_n as square-root expressions in P_n and Q_n, with q = 4x - 1
/// and 1/sqrt(q) written as s/q; denominators cleared by q^(n+1) and q^n.
VerificationReport verify_thm31(long n_max);

/// (fD)^n(f) and (fD)^n(g) after g = 2h, f^2 = 1 + h^2, against
/// n! f^(n+1) (-i)^n L_n(i h) and 2 (n+1)! f^(n+2) (-i)^(n-1) N_n(i h), q = -1.
VerificationReport verify_cor33(long n_max);

/// Under u -> u^2*v, v -> u^3 and u = s, v = x with q = x^2 - 1:
/// D^n(uv) = n! s^(n+1) T_{n+1}(x) and D^n(u^2) = n! s^(n+2) U_n(x), 0 <= n <= n_max.
VerificationReport verify_thm42_special(long n_max);

}  // namespace cfgcalc::quadext
