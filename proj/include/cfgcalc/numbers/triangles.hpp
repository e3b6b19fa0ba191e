#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cfgcalc/algebra/bigint.hpp"

namespace cfgcalc::numbers {

using algebra::BigInt;

// Entry functions. Unless noted, they return 0 outside the support
// 0 <= k <= max_k(n) and for n below the first row.

/// Type-A gamma triangle. Throws std::domain_error for n < 1.
BigInt gamma_a(long n, long k);
/// Type-B gamma triangle. Throws std::domain_error for n < 1.
BigInt gamma_b(long n, long k);

/// Permutations of [n] with k descents.
BigInt eulerian_a(long n, long k);
/// Signed permutations of [n] with k type-B descents.
BigInt eulerian_b(long n, long k);

/// h_k of the type-A associahedron of rank n-1: N(n,k+1) = C(n,k)C(n,k+1)/n.
BigInt narayana_h_a(long n, long k);
/// h_k of the type-B associahedron: C(n,k)^2.
BigInt assoc_h_b(long n, long k);

/// C_k * C(n-1, 2k)
BigInt motzkin_F(long n, long k);
/// C(2k,k) * C(n, 2k)
BigInt central_H(long n, long k);
/// C(n,k) * C(n-k, floor((n-k)/2)), defined from n = 0.
BigInt motzkin_T(long n, long k);
BigInt catalan(long k);
/// C(n,k) * 2^(n-k)
BigInt cube_f(long n, long k);

// Second computation paths, used to cross-check the entries above.
BigInt eulerian_a_closed(long n, long k);
BigInt eulerian_b_closed(long n, long k);
BigInt motzkin_F_recurrence(long n, long k);
BigInt central_H_recurrence(long n, long k);
BigInt motzkin_T_recurrence(long n, long k);

/// A lazily evaluated integer triangle indexed by rows n >= first_row and
/// 0 <= k <= max_k(n). Copies share one row cache, which is safe to use
/// from several threads.
class Triangle {
 public:
  enum class Backend { ClosedForm, Recurrence };
  using Entry = std::function<BigInt(long n, long k)>;
  using RowStep = std::function<std::vector<BigInt>(long n, const std::vector<BigInt>& prev)>;
  using Extent = std::function<long(long n)>;

  static Triangle closed_form(std::string name, long first_row, Extent max_k, Entry entry);
  /// `first` is row first_row; `step` builds row n from row n-1.
  static Triangle recurrence(std::string name, long first_row, Extent max_k,
                             std::vector<BigInt> first, RowStep step);

  const std::string& name() const;
  Backend backend() const;
  long first_row() const;
  long max_k(long n) const;

  BigInt operator()(long n, long k) const;
  /// Entries k = 0..max_k(n).
  std::vector<BigInt> row(long n) const;

 private:
  struct Impl;
  explicit Triangle(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

struct NamedTriangle {
  std::string name;
  std::vector<std::string> aliases;  // OEIS ids
  std::string description;
  Triangle triangle;
};

/// Every triangle exposed to the command line, in a fixed order.
const std::vector<NamedTriangle>& triangle_registry();

/// Looks up by name or alias; throws std::invalid_argument if unknown.
const NamedTriangle& find_triangle(std::string_view name);

/// Rows first_row .. first_row+rows-1.
std::vector<std::vector<BigInt>> rows_of(const Triangle& t, long rows);

/// One row per line, entries separated by single spaces.
std::string to_text(const Triangle& t, long rows);
/// {"name":..., "first_row":..., "rows":[["1"],["1","4"],...]}
nlohmann::json to_json(const Triangle& t, long rows);
/// OEIS b-file: header comments, then "index value" lines read by rows,
/// with the running index starting at `offset`.
std::string to_bfile(const NamedTriangle& t, long rows, long offset = 0);

}  // namespace cfgcalc::numbers
