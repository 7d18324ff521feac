#pragma once

#include <gmpxx.h>

#include <string>

namespace monotri {

// GMP values are always canonical: mpq_class keeps lowest terms with a
// positive denominator once canonicalize() has run, which every constructor
// below guarantees.
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den = 1);
Rational make_rational(long num, long den = 1);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

bool is_integer(const Rational& r);

// Throws InternalError when r has a non-unit denominator.
BigInt to_integer(const Rational& r, const char* context = "value");

BigInt factorial(unsigned long n);

/// a (a-1) ... (a-m+1) / m!, defined for any rational a; equals 1 for m = 0.
Rational generalized_binomial(const Rational& a, long m);

}  // namespace monotri
