#pragma once

#include <gmpxx.h>

#include <string>

namespace genuslab {

// Arbitrary-precision carriers for every exact quantity in the library.
// Rationals are kept canonical at all times: lowest terms, denominator > 0.
using BigInt = mpz_class;
using Rational = mpq_class;

// n! as an exact integer.
BigInt factorial(unsigned long n);

// Canonical rational from a numerator/denominator pair. Rejects den == 0.
Rational frac(long num, long den);
Rational frac(const BigInt& num, const BigInt& den);

// "p/q", with the "/q" omitted when the denominator is 1.
std::string fraction_string(const Rational& value);

// Inverse of fraction_string; accepts any "p" or "p/q" decimal spelling.
Rational parse_fraction(const std::string& text);

// Fixed-point rendering with `precision` digits after the point. The scaled
// numerator is divided exactly and rounded half to even, so the digits never
// pass through binary64.
std::string decimal_string(const Rational& value, int precision);

double to_double(const Rational& value);

}  // namespace genuslab
