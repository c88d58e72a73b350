#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dichotomy {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Canonical text form: "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "p", "-p", "p/q"; the result is canonicalized. Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace dichotomy
