#include "cfgcalc/numbers/triangles.hpp"

#include <mutex>
#include <sstream>

#include "cfgcalc/algebra/poly_json.hpp"
#include <stdexcept>

namespace cfgcalc::numbers {

using algebra::binomial;
using algebra::exact_div;
using algebra::ipow;

struct Triangle::Impl {
  std::string name;
  Backend backend;
  long first_row;
  Extent max_k;
  Entry entry;
  RowStep step;
  mutable std::mutex mutex;
  mutable std::vector<std::vector<BigInt>> rows;  // recurrence cache
};

Triangle Triangle::closed_form(std::string name, long first_row, Extent max_k, Entry entry) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->backend = Backend::ClosedForm;
  impl->first_row = first_row;
  impl->max_k = std::move(max_k);
  impl->entry = std::move(entry);
  return Triangle(std::move(impl));
}

Triangle Triangle::recurrence(std::string name, long first_row, Extent max_k,
                              std::vector<BigInt> first, RowStep step) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->backend = Backend::Recurrence;
  impl->first_row = first_row;
  impl->max_k = std::move(max_k);
  impl->step = std::move(step);
  impl->rows.push_back(std::move(first));
  return Triangle(std::move(impl));
}

const std::string& Triangle::name() const { return impl_->name; }
Triangle::Backend Triangle::backend() const { return impl_->backend; }
long Triangle::first_row() const { return impl_->first_row; }
long Triangle::max_k(long n) const { return impl_->max_k(n); }

std::vector<BigInt> Triangle::row(long n) const {
  if (n < impl_->first_row) return {};
  if (impl_->backend == Backend::ClosedForm) {
    std::vector<BigInt> out;
    for (long k = 0; k <= impl_->max_k(n); ++k) out.push_back(impl_->entry(n, k));
    return out;
  }
  std::lock_guard lock(impl_->mutex);
  auto& rows = impl_->rows;
  const auto idx = static_cast<std::size_t>(n - impl_->first_row);
  while (rows.size() <= idx) {
    const long next = impl_->first_row + static_cast<long>(rows.size());
    rows.push_back(impl_->step(next, rows.back()));
  }
  return rows[idx];
}

BigInt Triangle::operator()(long n, long k) const {
  if (n < impl_->first_row || k < 0 || k > impl_->max_k(n)) return 0;
  if (impl_->backend == Backend::ClosedForm) return impl_->entry(n, k);
  const auto r = row(n);
  return r[static_cast<std::size_t>(k)];
}

namespace {

// Entry k of `row`, 0 outside its bounds.
BigInt at(const std::vector<BigInt>& row, long k) {
  return k >= 0 && k < static_cast<long>(row.size()) ? row[static_cast<std::size_t>(k)] : BigInt(0);
}

long half(long n) { return n >= 0 ? n / 2 : -1; }

const Triangle& gamma_a_triangle() {
  static const Triangle t = Triangle::recurrence(
      "gamma-a", 1, [](long n) { return half(n - 1); }, {1},
      [](long n, const std::vector<BigInt>& prev) {
        std::vector<BigInt> row;
        for (long k = 0; k <= half(n - 1); ++k)
          row.push_back((k + 1) * at(prev, k) + (2 * n - 4 * k) * at(prev, k - 1));
        return row;
      });
  return t;
}

const Triangle& gamma_b_triangle() {
  static const Triangle t = Triangle::recurrence(
      "gamma-b", 1, [](long n) { return half(n); }, {1},
      [](long n, const std::vector<BigInt>& prev) {
        std::vector<BigInt> row;
        for (long k = 0; k <= half(n); ++k)
          row.push_back((2 * k + 1) * at(prev, k) + 4 * (n + 1 - 2 * k) * at(prev, k - 1));
        return row;
      });
  return t;
}

const Triangle& eulerian_a_triangle() {
  static const Triangle t = Triangle::recurrence(
      "eulerian-a", 1, [](long n) { return n - 1; }, {1},
      [](long n, const std::vector<BigInt>& prev) {
        std::vector<BigInt> row;
        for (long k = 0; k <= n - 1; ++k)
          row.push_back((k + 1) * at(prev, k) + (n - k) * at(prev, k - 1));
        return row;
      });
  return t;
}

const Triangle& eulerian_b_triangle() {
  static const Triangle t = Triangle::recurrence(
      "eulerian-b", 1, [](long n) { return n; }, {1, 1},
      [](long n, const std::vector<BigInt>& prev) {
        std::vector<BigInt> row;
        for (long k = 0; k <= n; ++k)
          row.push_back((2 * k + 1) * at(prev, k) + (2 * n - 2 * k + 1) * at(prev, k - 1));
        return row;
      });
  return t;
}

const Triangle& F_recurrence_triangle() {
  static const Triangle t = Triangle::recurrence(
      "motzkin-F/recurrence", 1, [](long n) { return half(n - 1); }, {1},
      [](long n, const std::vector<BigInt>& prev) {
        std::vector<BigInt> row;
        for (long k = 0; k <= half(n - 1); ++k) {
          const BigInt rhs = (n + 2 * k + 1) * at(prev, k) + 4 * (n - 2 * k) * at(prev, k - 1);
          row.push_back(exact_div(rhs, n + 1));
        }
        return row;
      });
  return t;
}

const Triangle& H_recurrence_triangle() {
  static const Triangle t = Triangle::recurrence(
      "central-H/recurrence", 1, [](long n) { return half(n); }, {1},
      [](long n, const std::vector<BigInt>& prev) {
        std::vector<BigInt> row;
        for (long k = 0; k <= half(n); ++k) {
          const BigInt rhs = (n + 2 * k) * at(prev, k) + 4 * (n - 2 * k + 1) * at(prev, k - 1);
          row.push_back(exact_div(rhs, n));
        }
        return row;
      });
  return t;
}

const Triangle& T_recurrence_triangle() {
  static const Triangle t = Triangle::recurrence(
      "motzkin-T/recurrence", 0, [](long n) { return n; }, {1},
      [](long n, const std::vector<BigInt>& prev) {
        std::vector<BigInt> row;
        for (long k = 0; k <= n; ++k) {
          const BigInt rhs = (2 * n + 1 - k) * at(prev, k - 1) + 2 * at(prev, k) +
                             4 * (k + 1) * at(prev, k + 1);
          row.push_back(exact_div(rhs, n + 1));
        }
        return row;
      });
  return t;
}

void require_row(const char* what, long n) {
  if (n < 1) throw std::domain_error(std::string(what) + " is defined for n >= 1");
}

bool in_range(long n, long k, long lo_n, long max_k) { return n >= lo_n && k >= 0 && k <= max_k; }

}  // namespace

BigInt gamma_a(long n, long k) {
  require_row("gamma_a", n);
  return gamma_a_triangle()(n, k);
}

BigInt gamma_b(long n, long k) {
  require_row("gamma_b", n);
  return gamma_b_triangle()(n, k);
}

BigInt eulerian_a(long n, long k) { return eulerian_a_triangle()(n, k); }
BigInt eulerian_b(long n, long k) { return eulerian_b_triangle()(n, k); }

BigInt narayana_h_a(long n, long k) {
  if (!in_range(n, k, 1, n - 1)) return 0;
  return exact_div(binomial(n, k) * binomial(n, k + 1), n);
}

BigInt assoc_h_b(long n, long k) {
  if (!in_range(n, k, 1, n)) return 0;
  const BigInt c = binomial(n, k);
  return c * c;
}

BigInt catalan(long k) {
  if (k < 0) return 0;
  return exact_div(binomial(2 * k, k), k + 1);
}

BigInt motzkin_F(long n, long k) {
  if (!in_range(n, k, 1, half(n - 1))) return 0;
  return catalan(k) * binomial(n - 1, 2 * k);
}

BigInt central_H(long n, long k) {
  if (!in_range(n, k, 1, half(n))) return 0;
  return binomial(2 * k, k) * binomial(n, 2 * k);
}

BigInt motzkin_T(long n, long k) {
  if (!in_range(n, k, 0, n)) return 0;
  return binomial(n, k) * binomial(n - k, (n - k) / 2);
}

BigInt cube_f(long n, long k) {
  if (!in_range(n, k, 0, n)) return 0;
  return binomial(n, k) * algebra::pow2(static_cast<unsigned long>(n - k));
}

BigInt eulerian_a_closed(long n, long k) {
  if (!in_range(n, k, 1, n - 1)) return 0;
  BigInt sum = 0;
  for (long j = 0; j <= k; ++j) {
    const BigInt t = binomial(n + 1, j) * ipow(BigInt(k + 1 - j), static_cast<unsigned long>(n));
    if (j % 2 == 0) sum += t; else sum -= t;
  }
  return sum;
}

BigInt eulerian_b_closed(long n, long k) {
  if (!in_range(n, k, 1, n)) return 0;
  BigInt sum = 0;
  for (long j = 0; j <= k; ++j) {
    const BigInt t = binomial(n + 1, k - j) * ipow(BigInt(2 * j + 1), static_cast<unsigned long>(n));
    if ((k - j) % 2 == 0) sum += t; else sum -= t;
  }
  return sum;
}

BigInt motzkin_F_recurrence(long n, long k) { return F_recurrence_triangle()(n, k); }
BigInt central_H_recurrence(long n, long k) { return H_recurrence_triangle()(n, k); }
BigInt motzkin_T_recurrence(long n, long k) { return T_recurrence_triangle()(n, k); }

const std::vector<NamedTriangle>& triangle_registry() {
  static const std::vector<NamedTriangle> registry = [] {
    std::vector<NamedTriangle> r;
    r.push_back({"gamma-a", {"A101280"}, "type-A Coxeter gamma-vectors a(n,k)", gamma_a_triangle()});
    r.push_back({"gamma-b", {}, "type-B Coxeter gamma-vectors b(n,k)", gamma_b_triangle()});
    r.push_back({"eulerian-a", {"A008292"}, "Eulerian numbers (descents over S_n)",
                 eulerian_a_triangle()});
    r.push_back({"eulerian-b", {"A060187"}, "type-B Eulerian numbers (descents over B_n)",
                 eulerian_b_triangle()});
    r.push_back({"narayana", {"A001263"}, "type-A associahedron h-vectors N(n,k+1)",
                 Triangle::closed_form("narayana", 1, [](long n) { return n - 1; }, narayana_h_a)});
    r.push_back({"assoc-b", {"A008459"}, "type-B associahedron h-vectors C(n,k)^2",
                 Triangle::closed_form("assoc-b", 1, [](long n) { return n; }, assoc_h_b)});
    r.push_back({"motzkin-F", {"A055151"}, "type-A associahedron gamma-vectors C_k C(n-1,2k)",
                 Triangle::closed_form("motzkin-F", 1, [](long n) { return half(n - 1); }, motzkin_F)});
    r.push_back({"central-H", {"A089627"}, "type-B associahedron gamma-vectors C(2k,k) C(n,2k)",
                 Triangle::closed_form("central-H", 1, [](long n) { return half(n); }, central_H)});
    r.push_back({"motzkin-T", {"A107230"}, "Motzkin left factors of length n with k level steps",
                 Triangle::closed_form("motzkin-T", 1, [](long n) { return n; }, motzkin_T)});
    r.push_back({"cube-f", {"A038207"}, "f-vectors of cubes C(n,k) 2^(n-k)",
                 Triangle::closed_form("cube-f", 1, [](long n) { return n; }, cube_f)});
    return r;
  }();
  return registry;
}

const NamedTriangle& find_triangle(std::string_view name) {
  for (const auto& t : triangle_registry()) {
    if (t.name == name) return t;
    for (const auto& a : t.aliases)
      if (a == name) return t;
  }
  throw std::invalid_argument("unknown triangle '" + std::string(name) + "'");
}

std::vector<std::vector<BigInt>> rows_of(const Triangle& t, long rows) {
  std::vector<std::vector<BigInt>> out;
  for (long i = 0; i < rows; ++i) out.push_back(t.row(t.first_row() + i));
  return out;
}

std::string to_text(const Triangle& t, long rows) {
  std::string out;
  for (const auto& row : rows_of(t, rows)) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k != 0) out += ' ';
      out += row[k].get_str();
    }
    out += '\n';
  }
  return out;
}

nlohmann::json to_json(const Triangle& t, long rows) {
  nlohmann::json r = nlohmann::json::array();
  for (const auto& row : rows_of(t, rows)) r.push_back(algebra::to_json_array(row));
  return {{"name", t.name()}, {"first_row", t.first_row()}, {"rows", std::move(r)}};
}

std::string to_bfile(const NamedTriangle& t, long rows, long offset) {
  std::ostringstream os;
  os << "# " << t.name;
  for (const auto& a : t.aliases) os << " (" << a << ")";
  os << ": " << t.description << '\n';
  os << "# rows n=" << t.triangle.first_row() << ".." << t.triangle.first_row() + rows - 1
     << ", read by rows, offset " << offset << '\n';
  long index = offset;
  for (const auto& row : rows_of(t.triangle, rows))
    for (const auto& v : row) os << index++ << ' ' << v.get_str() << '\n';
  return os.str();
}

}  // namespace cfgcalc::numbers
