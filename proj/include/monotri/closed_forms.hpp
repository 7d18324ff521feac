#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monotri/multipoly.hpp"
#include "monotri/rational.hpp"
#include "monotri/shift_op.hpp"

namespace monotri {

// Number of k-variables of the halved-triangle polynomials with n rows.
inline int hmt_arity(int n) { return (n + 1) / 2; }

// Weak-row halved triangle count (Proctor) as a polynomial and at a point.
MultiPoly beta_poly(int n);
Rational beta(int n, const Rational& x, std::span<const Rational> k);
Rational beta(int n, long x, std::span<const long> k);

// Product on which the THEOREM1 operator acts, normalised by the
// (j-i)(j+i-1) resp. (j-i)(j+i) and i denominators.
MultiPoly gamma_base(int n);
// The same product without those denominators.
MultiPoly base_unnormalized(int n);

// gamma(n) as a polynomial; cached per n behind a mutex.
MultiPoly gamma_theorem1(int n);
// gamma_theorem1(n) at an integer point. No order check on k: non-increasing
// tuples give the polynomial extension.
BigInt gamma_value(int n, long x, std::span<const long> k);

// gamma(n) through the inverse-operator product, exact on polynomials of
// per-variable degree <= degree_bound. The result is checked by mapping it
// back with the NORMALIZER operator; a failure throws InternalError naming
// the bound.
MultiPoly gamma_via_inverse_ops(int n, int degree_bound);

Rational gamma_via_beta(int n, long x, std::span<const long> k);

// gamma(n) pushed through the V product; antisymmetric in k.
MultiPoly gamma_star(int n);

MultiPoly gamma_bar(int n);
Rational gamma_via_gamma_bar(int n, long x, std::span<const long> k);

// Monotone triangles with bottom row (k_1..k_n); arity n, x does not occur.
MultiPoly alpha_poly(int n);
BigInt alpha_value(int n, std::span<const long> k);

BigInt asm_count(int n);
BigInt vsasm_count(int n);

// 1 / ((n-1)! (n-3)! ... ) down to 2! (odd n) or 1! (even n).
Rational leading_constant(int n);

// Expansion of p in the basis prod_i (k_i)_{m_i}; coefficients are
// polynomials in x alone (arity 0 would lose x, so they keep p's arity).
using FallingFactorialExpansion = std::map<std::vector<int>, MultiPoly>;
FallingFactorialExpansion falling_factorial_expansion(const MultiPoly& p);

struct LeadingTerm {
  std::vector<int> degrees;  // lexicographically largest (m_1, ..., m_r)
  MultiPoly coefficient;
};
// Throws InvalidInput for the zero polynomial.
LeadingTerm leading_falling_factorial(const MultiPoly& p);

struct FormulaResult {
  std::optional<MultiPoly> symbolic;
  std::optional<Rational> value;
  std::string method;
  int n = 0;
  std::optional<long> x;
  std::vector<long> k;
};

}  // namespace monotri
