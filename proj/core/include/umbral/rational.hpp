#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace umbral {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator once it has been produced by arithmetic; values
/// built from a raw numerator/denominator pair must go through
/// make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q" (optional sign, decimal digits only).
/// Throws umbral::Error on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// q^k for a natural exponent; q^0 == 1 including 0^0.
Rational pow(const Rational& q, unsigned long k);

}  // namespace umbral
