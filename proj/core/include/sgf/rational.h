#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sgf {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical exact form: "p" for integers, "p/q" otherwise (q > 0, lowest terms).
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// Accepts "p", "p/q", and plain decimals such as "-0.25" or "1e-8".
Rational parse_rational(std::string_view text);

// Decimal expansion rounded half away from zero to `digits` fractional digits.
std::string to_decimal(const Rational& value, int digits);

// 2^exponent for any integer exponent.
Rational pow2(long exponent);

int sign(const Rational& value);
int sign(const Integer& value);

}  // namespace sgf
