#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypermatch {

using Rational = mpq_class;
using BigInt = mpz_class;

/// "p/q" in lowest terms with positive denominator; integers render as "p/1".
std::string to_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p". Throws Error(parse_error) otherwise.
Rational parse_rational(std::string_view text);

Rational make_rational(long numerator, long denominator = 1);
Rational from_big(const BigInt& value);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

/// Exact integer power of a rational.
Rational pow(const Rational& base, unsigned exponent);

}  // namespace hypermatch
