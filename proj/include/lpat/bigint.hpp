#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace lpat {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Floor square root: the unique s with s*s <= v < (s+1)*(s+1).
/// Throws DomainError for negative v.
BigInt isqrt(const BigInt& v);

/// 2^e as a big integer.
BigInt pow2(std::size_t e);

/// Exact rational num/den, canonicalized. Throws DomainError if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "NUM/DEN" or "NUM" (nonnegative integers only).
Rational parse_rational(std::string_view text);

/// "num/den" with den always printed, e.g. "0/1", "3/5".
std::string to_fraction_string(const Rational& q);

/// Decimal rendering rounded half-up to `places` digits after the point.
std::string to_decimal_string(const Rational& q, int places = 12);

}  // namespace lpat
