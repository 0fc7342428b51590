#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lefschetz {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q" with the denominator omitted when it is 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws ParseError on anything else or q == 0.
Rational parse_rational(std::string_view text);

Rational factorial(long n);
Rational binomial(long n, long k);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace lefschetz
