#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rrl {

// GMP keeps mpq_class canonical after every arithmetic operation:
// lowest terms, positive denominator, zero as 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// "num/den", always with an explicit denominator.
std::string to_string(const Rational& q);

// Accepts "n" or "n/d". Throws UsageError on malformed text or d == 0.
// With `canonical_only`, rejects fractions that are not in lowest terms.
Rational parse_rational(std::string_view text, bool canonical_only = false);

int sign(const Rational& q);
Rational abs(const Rational& q);

}  // namespace rrl
