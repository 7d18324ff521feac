#include "monotri/rational.hpp"

#include "monotri/errors.hpp"

namespace monotri {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const BigInt& z) { return z.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

BigInt to_integer(const Rational& r, const char* context) {
  if (!is_integer(r)) {
    throw InternalError(std::string(context) + " is not integral: " + to_string(r));
  }
  return r.get_num();
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

// m < 0 yields 0, which keeps binomial sums free of special cases.
Rational generalized_binomial(const Rational& a, long m) {
  if (m < 0) return 0;
  Rational num = 1;
  for (long i = 0; i < m; ++i) num *= a - i;
  return num / Rational(factorial(static_cast<unsigned long>(m)));
}

}  // namespace monotri
