#pragma once

#include <gmpxx.h>

#include <string>

namespace latframe {

// Exact scalars. Integer is arbitrary precision; Rational is kept canonical
// (lowest terms, positive denominator) by construction, so equality is value
// equality.
using Integer = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms, denominator forced positive.
// Throws InvalidInput on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
// Distinct errors for malformed text and for a zero denominator.
Rational parse_rational(const std::string& text);

Integer parse_integer(const std::string& text);

// Canonical rendering: "p/q" in lowest terms, "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

// floor(x) as an exact integer (round toward minus infinity).
Integer floor_rational(const Rational& x);

Integer pow_integer(const Integer& base, unsigned long exp);

} // namespace latframe
