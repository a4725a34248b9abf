#pragma once

#include <gmpxx.h>

#include <string>

namespace qes {

// All symbolic computation in this library runs on exact rationals.
// mpq_class keeps values canonical (lowest terms, positive denominator)
// as long as they are built through its own operators; the helpers below
// canonicalize explicitly where raw constructors would not.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// 10^k as an exact rational, k may be negative.
Rational pow10(int k);

Integer factorial(unsigned long n);

int sign(const Rational& q);

// Fixed-point rendering with `digits` fractional digits, round half away
// from zero: decimal_string(-3/2, 3) == "-1.500". The printed value is
// within 10^(-digits)/2 of q, so parsing it back recovers q to the stated
// precision.
std::string decimal_string(const Rational& q, int digits);

}  // namespace qes
