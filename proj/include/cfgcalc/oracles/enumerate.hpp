#pragma once

#include <stdexcept>
#include <vector>

#include "cfgcalc/algebra/bigint.hpp"

namespace cfgcalc::oracles {

using algebra::BigInt;

/// Raised when an exhaustive enumeration is requested beyond its size guard.
class GuardError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr long kMaxPermutationSize = 9;
inline constexpr long kMaxSignedPermutationSize = 7;
inline constexpr long kMaxPathLength = 18;

enum class PermType { A, B };

/// Window notation pi(1..n) of a signed permutation: nonzero entries whose
/// absolute values form a permutation of [n].
struct SignedPerm {
  std::vector<int> images;
};

/// Number of i in {0..n-1} with pi(i) > pi(i+1), reading pi(0) = 0.
int type_b_descents(const SignedPerm& p);

/// Histogram over k of descents across all of S_n. 1 <= n <= 9.
std::vector<BigInt> descent_distribution(long n);

/// Histogram over k of type-B descents across all of B_n. 1 <= n <= 7.
std::vector<BigInt> descent_b_distribution(long n);

/// Elements with pi(1) > pi(2) < pi(3) > ... in S_n (n <= 9) or B_n (n <= 7).
BigInt count_alternating(long n, PermType type);

/// Motzkin paths (U, D, H steps, never below the axis, ending on it) of
/// the given length with exactly k up steps. length <= 18.
BigInt motzkin_with_up_steps(long length, long k);

/// Left factors of Motzkin paths (never below the axis, any end height) of
/// the given length with exactly k level steps. length <= 18.
BigInt left_factors_with_H(long length, long k);

}  // namespace cfgcalc::oracles
