#include "cfgcalc/algebra/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace cfgcalc::algebra {

bool is_valid_letter_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front())))
    return false;
  return std::all_of(name.begin(), name.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)); });
}

namespace {
const std::shared_ptr<const std::vector<std::string>>& empty_letters() {
  static const auto empty = std::make_shared<const std::vector<std::string>>();
  return empty;
}
}  // namespace

Alphabet::Alphabet() : letters_(empty_letters()) {}

Alphabet::Alphabet(std::vector<std::string> letters) {
  std::unordered_set<std::string> seen;
  for (const auto& l : letters) {
    if (!is_valid_letter_name(l))
      throw AlphabetError("invalid letter name '" + l + "'");
    if (!seen.insert(l).second)
      throw AlphabetError("duplicate letter '" + l + "'");
  }
  letters_ = std::make_shared<const std::vector<std::string>>(std::move(letters));
}

Alphabet::Alphabet(std::initializer_list<std::string> letters)
    : Alphabet(std::vector<std::string>(letters)) {}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  const auto& v = *letters_;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == name) return i;
  return std::nullopt;
}

std::size_t Alphabet::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw AlphabetError("unknown letter '" + std::string(name) + "'");
}

Alphabet Alphabet::union_with(const Alphabet& other) const {
  if (*this == other) return *this;
  std::vector<std::string> merged = letters();
  for (const auto& l : other.letters())
    if (!contains(l)) merged.push_back(l);
  return Alphabet(std::move(merged));
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  return a.letters_ == b.letters_ || *a.letters_ == *b.letters_;
}

unsigned long Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0UL);
}

Monomial Monomial::with(std::size_t i, Exponent e) const {
  Monomial m = *this;
  m.exps_.at(i) = e;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += o.exps_[i];
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  return a.exps_ <=> b.exps_;
}

MultiPoly::MultiPoly(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

MultiPoly MultiPoly::constant(const Alphabet& alphabet, const BigInt& c) {
  return term(alphabet, Monomial(alphabet.size()), c);
}

MultiPoly MultiPoly::letter(const Alphabet& alphabet, std::string_view name) {
  return term(alphabet, Monomial(alphabet.size()).with(alphabet.index_of(name), 1));
}

MultiPoly MultiPoly::term(const Alphabet& alphabet, Monomial m, const BigInt& c) {
  if (m.size() != alphabet.size())
    throw AlphabetError("monomial length does not match alphabet size");
  MultiPoly p(alphabet);
  p.add_term(m, c);
  return p;
}

BigInt MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::rebase(const Alphabet& target) const {
  if (target == alphabet_) return *this;
  std::vector<std::size_t> where(alphabet_.size());
  std::vector<bool> used(alphabet_.size(), false);
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) used[i] = used[i] || m[i] != 0;
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    auto j = target.find(alphabet_.name(i));
    if (!j) {
      if (used[i])
        throw AlphabetError("cannot drop letter '" + alphabet_.name(i) +
                            "' which occurs in the polynomial");
      where[i] = target.size();
    } else {
      where[i] = *j;
    }
  }
  MultiPoly out(target);
  for (const auto& [m, c] : terms_) {
    std::vector<Monomial::Exponent> e(target.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) e[where[i]] = m[i];
    out.terms_.emplace(Monomial(std::move(e)), c);
  }
  return out;
}

Monomial::Exponent MultiPoly::degree_in(std::size_t letter) const {
  Monomial::Exponent d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[letter]);
  return d;
}

void MultiPoly::require_same_alphabet(const MultiPoly& o, const char* op) const {
  if (!(alphabet_ == o.alphabet_))
    throw AlphabetError(std::string("alphabet mismatch in ") + op);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_alphabet(o, "addition");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_alphabet(o, "subtraction");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_alphabet(b, "multiplication");
  MultiPoly out(a.alphabet_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const BigInt& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

MultiPoly operator-(MultiPoly a) {
  for (auto& [m, v] : a.terms_) v = -v;
  return a;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
}

MultiPoly pow(const MultiPoly& p, unsigned long e) {
  MultiPoly result = MultiPoly::constant(p.alphabet(), 1);
  MultiPoly base = p;
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

MultiPoly partial_derivative(const MultiPoly& p, std::string_view letter) {
  const std::size_t i = p.alphabet().index_of(letter);
  MultiPoly out(p.alphabet());
  for (const auto& [m, c] : p.terms()) {
    if (m[i] == 0) continue;
    out.add_term(m.with(i, m[i] - 1), c * m[i]);
  }
  return out;
}

namespace {

// Caches r^0, r^1, ... on demand.
class PowerTable {
 public:
  explicit PowerTable(MultiPoly r) {
    powers_.push_back(MultiPoly::constant(r.alphabet(), 1));
    powers_.push_back(std::move(r));
  }
  const MultiPoly& operator()(unsigned e) {
    while (powers_.size() <= e) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[e];
  }

 private:
  std::vector<MultiPoly> powers_;
};

}  // namespace

MultiPoly substitute(const MultiPoly& p, std::string_view letter, const MultiPoly& r) {
  const std::size_t x = p.alphabet().index_of(letter);
  const Alphabet target = p.alphabet().union_with(r.alphabet());
  const MultiPoly base = p.rebase(target);
  PowerTable rp(r.rebase(target));
  MultiPoly out(target);
  for (const auto& [m, c] : base.terms()) {
    const MultiPoly rest = MultiPoly::term(target, m.with(x, 0), c);
    out += rest * rp(m[x]);
  }
  return out;
}

ParitySubstitution substitute_square_with_parity(const MultiPoly& p,
                                                 std::string_view letter,
                                                 const MultiPoly& r) {
  const std::size_t x = p.alphabet().index_of(letter);
  std::optional<unsigned> parity;
  for (const auto& [m, c] : p.terms()) {
    const unsigned e = m[x] % 2;
    if (parity && *parity != e)
      throw ParityError("exponents of '" + std::string(letter) +
                        "' have mixed parity in " + to_string(p));
    parity = e;
  }
  const Alphabet target = p.alphabet().union_with(r.alphabet());
  const MultiPoly base = p.rebase(target);
  PowerTable rp(r.rebase(target));
  ParitySubstitution out{static_cast<int>(parity.value_or(0)), MultiPoly(target)};
  for (const auto& [m, c] : base.terms()) {
    const MultiPoly rest = MultiPoly::term(target, m.with(x, 0), c);
    out.reduced += rest * rp(m[x] / 2);
  }
  return out;
}

MultiPoly divide_by_letter_power(const MultiPoly& p, std::string_view letter,
                                 Monomial::Exponent e) {
  const std::size_t x = p.alphabet().index_of(letter);
  MultiPoly out(p.alphabet());
  for (const auto& [m, c] : p.terms()) {
    if (m[x] < e)
      throw std::domain_error("term of " + to_string(p) + " not divisible by " +
                              std::string(letter) + "^" + std::to_string(e));
    out.add_term(m.with(x, m[x] - e), c);
  }
  return out;
}

Rational eval_rational(const MultiPoly& p, const Assignment& values) {
  const Alphabet& a = p.alphabet();
  std::vector<const Rational*> v(a.size(), nullptr);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (auto it = values.find(a.name(i)); it != values.end()) v[i] = &it->second;
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (v[i] == nullptr)
        throw AlphabetError("no value assigned to letter '" + a.name(i) + "'");
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), v[i]->get_num_mpz_t(), m[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), v[i]->get_den_mpz_t(), m[i]);
      t *= pw;
    }
    sum += t;
  }
  return sum;
}

namespace detail {

void append_term(std::string& out, const BigInt& coeff,
                 std::span<const std::pair<std::string_view, unsigned long>> powers,
                 bool first) {
  const bool negative = coeff < 0;
  if (first) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  BigInt mag = abs(coeff);
  bool wrote = false;
  if (mag != 1 || powers.empty()) {
    out += mag.get_str();
    wrote = true;
  }
  for (const auto& [name, e] : powers) {
    if (wrote) out += '*';
    out += name;
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
    wrote = true;
  }
}

}  // namespace detail

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  std::vector<std::pair<std::string_view, unsigned long>> powers;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    powers.clear();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) powers.emplace_back(p.alphabet().name(i), m[i]);
    detail::append_term(out, c, powers, first);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
  return os << to_string(p);
}

}  // namespace cfgcalc::algebra
