#pragma once

#include <gmpxx.h>

#include <string>

namespace cfgcalc::algebra {

/// Arbitrary-precision signed integer.
using BigInt = mpz_class;

/// Exact rational; always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n
BigInt pow2(unsigned long e);
BigInt ipow(const BigInt& base, unsigned long e);

/// Exact quotient; throws std::logic_error when den does not divide num.
BigInt exact_div(const BigInt& num, const BigInt& den);

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }
BigInt from_decimal(const std::string& text);

}  // namespace cfgcalc::algebra
