#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bettikit {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Parses "n", "-n" or "n/d" with decimal digits; the result is canonical.
/// Throws ParseError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// n! as an exact integer.
BigInt factorial(unsigned n);

}  // namespace bettikit
