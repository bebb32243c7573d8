#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hooklab {

// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Height max(|p|, q) of a canonical rational.
mpz_class height(const Rational& r);

}  // namespace hooklab
