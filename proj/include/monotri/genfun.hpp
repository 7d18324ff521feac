#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monotri/multipoly.hpp"
#include "monotri/rational.hpp"
#include "monotri/shift_op.hpp"

namespace monotri {

// prod_{i<j} (X_j - X_i)(1 - X_j + X_i X_j) on n symbols.
LaurentPoly mt_numerator(int n);
// prod_{i<j} (X_j - X_i)(X_i + X_j - 1)(X_i X_j - 1)(1 - X_j + X_i X_j) on m symbols.
LaurentPoly hmt_numerator(int m);

// Coefficient of X^k in prod_i X_i^{-(n-1)} (1 - X_i)^{-n} * mt_numerator(n),
// read as a power series in the X_i. Defined for every integer k.
BigInt mt_gf_coeff(int n, std::span<const long> k);

// Constant term of prod_i X_i^{-(n+i-2)} (1 - X_i)^{-n} * mt_numerator(n).
BigInt asm_constant_term(int n);

// Exponent c used for the halved generating function:
// x + (1 - n)/2 for odd n, x + 2 - n/2 for even n.
long hmt_gf_cutoff(int n, long x);

struct HmtGfCoeff {
  BigInt value;
  bool in_region = true;  // all k_l <= c
  std::vector<std::string> warnings;
};

// Coefficient of X^k in
//   hmt_numerator(m) * prod_i X_i^{c+1} / (X_i - 1)^n
// expanded as a Laurent series in 1/X_i. Outside k_l <= c the formal
// coefficient is still returned, flagged and with a warning.
HmtGfCoeff hmt_gf_coeff(int n, long x, std::span<const long> k);

enum class GfFamily { MT, HMT, ASM_CONSTANT_TERM };

std::string to_string(GfFamily f);
std::optional<GfFamily> parse_gf_family(const std::string& name);

struct GfQuery {
  GfFamily family = GfFamily::MT;
  int n = 1;
  std::optional<long> x;  // HMT only
  std::vector<long> exponents;
};

struct GfResult {
  BigInt value;
  std::vector<std::string> warnings;
};

// Validates the exponent count against the family and dispatches.
GfResult gf_coeff(const GfQuery& q);

// --- binomial determinants ----------------------------------------------

// kind 1: det binom(k_i + j - 1, 2j - 1); kind 2: det binom(k_i + j - 3/2, 2j - 2).
Rational binom_determinant(int kind, std::span<const Rational> k);
// The matching product evaluations.
Rational binom_determinant_product(int kind, std::span<const Rational> k);

// Exact determinant by Gaussian elimination over Q.
Rational det_rational(std::vector<std::vector<Rational>> a);
// Leibniz expansion; meant for n <= 5.
MultiPoly det_poly(const std::vector<std::vector<MultiPoly>>& a);

// binom(form, m) = form (form - 1) ... (form - m + 1) / m! for an affine form.
MultiPoly binomial_poly(const MultiPoly& form, int m);

// Both determinant sides as polynomials in k_1..k_n.
MultiPoly binom_determinant_symbolic(int kind, int n);
MultiPoly binom_determinant_product_symbolic(int kind, int n);

// --- series identities ----------------------------------------------------

enum class Parity { Odd, Even };

// Checks
//   odd:  sum_{l <= c} binom(l + j - c + z, 2j - 2) X^l =  X^{j+c-z-2} / (X - 1)^{2j-1}
//   even: sum_{l <= c} binom(l + j - c + z, 2j - 1) X^l = -X^{j+c-z-1} / (X - 1)^{2j}
// coefficientwise for l in (c - window, c], with the right side expanded in
// 1/X, and that the right side has no support in (c, c + window].
// z must lie in [-j-1, j-3] (odd) or [-j-1, j-2] (even).
bool series_identity_check(Parity parity, int j, long z, long c, int window);

// Coefficient of X^s in (X - 1)^{-N} as a series in 1/X.
BigInt inverse_power_coeff_1overx(int N, long s);

}  // namespace monotri
