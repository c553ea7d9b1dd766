#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace skein {

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;
using BigInt = mpz_class;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& x);

/// Parses "n" or "n/d"; throws Error(ParseError) on malformed text.
Rational parse_rational(const std::string& text);

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// n! (memoized, thread-safe).
const BigInt& factorial(unsigned n);

/// C(n, k); zero when k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// x^e for integer x and e >= 0.
BigInt int_pow(std::int64_t x, unsigned e);

/// (-1)^e as +1 / -1.
inline int sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace skein
