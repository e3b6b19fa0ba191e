#include "cfgcalc/oracles/enumerate.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

namespace cfgcalc::oracles {

namespace {

void guard(const char* what, long n, long lo, long hi) {
  if (n < lo || n > hi)
    throw GuardError(std::string(what) + ": n=" + std::to_string(n) + " outside enumeration guard [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::vector<int> identity(long n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

template <class Range>
bool alternating(const Range& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const bool want_down = i % 2 == 0;
    if (want_down ? !(w[i] > w[i + 1]) : !(w[i] < w[i + 1])) return false;
  }
  return true;
}

// Calls f on every signed permutation of [n] in window notation.
template <class F>
void for_each_signed(long n, F&& f) {
  std::vector<int> perm = identity(n);
  SignedPerm sp{std::vector<int>(perm.size())};
  const std::uint32_t masks = 1U << n;
  do {
    for (std::uint32_t signs = 0; signs < masks; ++signs) {
      for (std::size_t i = 0; i < perm.size(); ++i)
        sp.images[i] = (signs >> i) & 1U ? -perm[i] : perm[i];
      f(sp);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

// Depth-first walk over step sequences, pruning any prefix that dips below 0.
struct PathCounter {
  long length;
  bool must_return;
  bool count_up;  // count U steps when true, H steps otherwise
  long target;
  std::uint64_t hits = 0;

  void walk(long pos, long height, long counted) {
    if (counted > target) return;
    const long left = length - pos;
    if (must_return && height > left) return;
    if (pos == length) {
      if (counted == target && (!must_return || height == 0)) ++hits;
      return;
    }
    walk(pos + 1, height + 1, counted + (count_up ? 1 : 0));
    if (height > 0) walk(pos + 1, height - 1, counted);
    walk(pos + 1, height, counted + (count_up ? 0 : 1));
  }
};

}  // namespace

int type_b_descents(const SignedPerm& p) {
  int des = 0;
  int prev = 0;
  for (int v : p.images) {
    if (prev > v) ++des;
    prev = v;
  }
  return des;
}

std::vector<BigInt> descent_distribution(long n) {
  guard("descent_distribution", n, 1, kMaxPermutationSize);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n), 0);
  std::vector<int> p = identity(n);
  do {
    std::size_t des = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] > p[i + 1]) ++des;
    ++hist[des];
  } while (std::next_permutation(p.begin(), p.end()));
  return {hist.begin(), hist.end()};
}

std::vector<BigInt> descent_b_distribution(long n) {
  guard("descent_b_distribution", n, 1, kMaxSignedPermutationSize);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(n + 1), 0);
  for_each_signed(n, [&](const SignedPerm& sp) { ++hist[static_cast<std::size_t>(type_b_descents(sp))]; });
  return {hist.begin(), hist.end()};
}

BigInt count_alternating(long n, PermType type) {
  std::uint64_t count = 0;
  if (type == PermType::A) {
    guard("count_alternating(A)", n, 1, kMaxPermutationSize);
    std::vector<int> p = identity(n);
    do {
      if (alternating(p)) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
  } else {
    guard("count_alternating(B)", n, 1, kMaxSignedPermutationSize);
    for_each_signed(n, [&](const SignedPerm& sp) {
      if (alternating(sp.images)) ++count;
    });
  }
  return BigInt(static_cast<unsigned long>(count));
}

BigInt motzkin_with_up_steps(long length, long k) {
  guard("motzkin_with_up_steps", length, 0, kMaxPathLength);
  if (k < 0) return 0;
  PathCounter c{length, true, true, k};
  c.walk(0, 0, 0);
  return BigInt(static_cast<unsigned long>(c.hits));
}

BigInt left_factors_with_H(long length, long k) {
  guard("left_factors_with_H", length, 0, kMaxPathLength);
  if (k < 0) return 0;
  PathCounter c{length, false, false, k};
  c.walk(0, 0, 0);
  return BigInt(static_cast<unsigned long>(c.hits));
}

}  // namespace cfgcalc::oracles
