#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <string>

#include "monotri/brute.hpp"
#include "monotri/closed_forms.hpp"
#include "monotri/errors.hpp"

using namespace monotri;

namespace {

MultiPoly P(const char* s, int arity) { return parse_poly(s, arity); }

std::map<int, MultiPoly> load_golden(const std::string& file) {
  std::ifstream in(std::string(MONOTRI_FIXTURES) + "/" + file);
  EXPECT_TRUE(in) << file;
  std::map<int, MultiPoly> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    const int n = std::stoi(line.substr(0, colon));
    out.emplace(n, parse_poly(line.substr(colon + 1), hmt_arity(n)));
  }
  return out;
}

}  // namespace

TEST(Golden, GammaMatchesFixtures) {
  const auto golden = load_golden("gamma_golden.txt");
  ASSERT_EQ(golden.size(), 5u);
  for (const auto& [n, p] : golden) EXPECT_EQ(gamma_theorem1(n), p) << "n=" << n;
}

TEST(Golden, GammaStarMatchesFixtures) {
  const auto golden = load_golden("gamma_star_golden.txt");
  ASSERT_EQ(golden.size(), 5u);
  for (const auto& [n, p] : golden) EXPECT_EQ(gamma_star(n), p) << "n=" << n;
}

TEST(Beta, Examples) {
  const long k3[1] = {3}, k12[2] = {1, 2}, k5[1] = {5};
  EXPECT_EQ(beta(2, 5, k3), 3);
  EXPECT_EQ(beta(1, 9, k5), 1);
  // Oracle: brute force over weakly increasing rows.
  EXPECT_EQ(beta(3, 3, k12), Rational(count_weak_hmt_brute(3, 3, k12)));
  EXPECT_EQ(beta(3, 3, k12), 5);
}

TEST(Beta, RationalArguments) {
  const Rational k[1] = {make_rational(1, 2)};
  EXPECT_EQ(beta(2, Rational(2), k), make_rational(5, 2));
}

TEST(GammaBase, Examples) {
  EXPECT_EQ(gamma_base(1), P("1", 1));
  EXPECT_EQ(gamma_base(2), P("x + 1 - k1", 1));
  EXPECT_EQ(gamma_base(3), P("1/2 (k2 - k1) (2x + 1 - k1 - k2)", 2));
}

TEST(GammaPoly, Examples) {
  EXPECT_EQ(gamma_theorem1(3), P("1/2 (2x+2-k1-k2) (k2-k1+1)", 2));
  const long k12[2] = {1, 2};
  EXPECT_EQ(gamma_value(4, 2, k12), 3);
  EXPECT_THROW(gamma_theorem1(0), InvalidInput);
  EXPECT_THROW(gamma_value(4, 2, std::span<const long>(k12, 1)), InvalidInput);
}

TEST(GammaViaInverseOps, Examples) {
  EXPECT_EQ(gamma_via_inverse_ops(1, 0), P("1", 1));
  EXPECT_EQ(gamma_via_inverse_ops(2, 1), P("x - k1 + 1", 1));
  EXPECT_EQ(gamma_via_inverse_ops(3, 2), gamma_theorem1(3));
  EXPECT_EQ(gamma_via_inverse_ops(4, 3), gamma_theorem1(4));
}

TEST(GammaViaInverseOps, InsufficientBoundIsReported) {
  EXPECT_THROW(gamma_via_inverse_ops(5, 1), InternalError);
}

TEST(GammaViaBeta, Examples) {
  const long k3[1] = {3}, k12[2] = {1, 2};
  EXPECT_EQ(gamma_via_beta(2, 5, k3), 3);
  EXPECT_EQ(gamma_via_beta(3, 3, k12), 5);
  EXPECT_EQ(gamma_via_beta(4, 2, k12), 3);
}

TEST(GammaStar, Examples) {
  EXPECT_EQ(gamma_star(1), P("1", 1));
  EXPECT_EQ(gamma_star(3), P("1/2 (2x+1-k1-k2) (k2-k1)", 2));
}

TEST(GammaBar, Examples) {
  EXPECT_EQ(gamma_bar(1), P("1", 1));
  EXPECT_EQ(gamma_bar(2), P("x + 1 - k1", 1));
  const long k12[2] = {1, 2};
  EXPECT_EQ(gamma_via_gamma_bar(3, 3, k12), 5);
}

TEST(Alpha, Examples) {
  const long a[3] = {1, 2, 3}, b[3] = {-1, 2, 3}, c[3] = {3, 2, 1};
  EXPECT_EQ(alpha_value(3, a), 7);
  EXPECT_EQ(alpha_value(3, b), 23);
  EXPECT_EQ(alpha_value(3, c), -1);
  EXPECT_EQ(alpha_poly(2), P("k2 - k1 + 1", 2));
}

TEST(ProductFormulas, Examples) {
  const long expected_asm[] = {1, 2, 7, 42, 429, 7436, 218348};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(asm_count(n), expected_asm[n - 1]);
  EXPECT_EQ(vsasm_count(1), 1);
  EXPECT_EQ(vsasm_count(2), 3);
  EXPECT_EQ(vsasm_count(3), 26);
  EXPECT_EQ(vsasm_count(4), 646);
}

TEST(LeadingConstant, Examples) {
  EXPECT_EQ(leading_constant(2), 1);
  EXPECT_EQ(leading_constant(3), make_rational(1, 2));
  EXPECT_EQ(leading_constant(4), make_rational(1, 6));
  EXPECT_EQ(leading_constant(5), make_rational(1, 48));
}

TEST(LeadingConstant, FallingFactorialLeadingTerm) {
  // The leading falling-factorial coefficient of gamma(n) is C_n up to a
  // sign that is negative when n/2 is odd.
  for (int n = 2; n <= 6; ++n) {
    const auto lead = leading_falling_factorial(gamma_theorem1(n));
    const int m = hmt_arity(n);
    const bool negative = n % 2 == 0 && (n / 2) % 2 == 1;
    const Rational c = negative ? Rational(-leading_constant(n)) : leading_constant(n);
    EXPECT_EQ(lead.coefficient, MultiPoly::constant(m, c)) << "n=" << n << " " << to_string(lead.coefficient);
  }
  EXPECT_THROW(leading_falling_factorial(MultiPoly(2)), InvalidInput);
}

TEST(FallingFactorial, ExpansionReconstructs) {
  const auto p = gamma_theorem1(4);
  const int m = p.arity();
  MultiPoly sum(m);
  for (const auto& [degs, coef] : falling_factorial_expansion(p)) {
    MultiPoly term = coef;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < degs[static_cast<std::size_t>(i)]; ++j) {
        term *= MultiPoly::variable(m, VarId::k(i + 1)) - Rational(j);
      }
    }
    sum += term;
  }
  EXPECT_EQ(sum, p);
}

TEST(Normalization, QuadrupleFixesBase) {
  for (int n = 2; n <= 5; ++n) {
    const int m = hmt_arity(n);
    const auto base = base_unnormalized(n);
    EXPECT_EQ(apply_factors(operator_factors(OperatorKind::QUADRUPLE, m), base), base) << "n=" << n;
  }
}

TEST(Symbolic, SixRowsAgreeWithRecursionOnGrid) {
  const auto g = gamma_theorem1(6);
  for (long x = 3; x <= 5; ++x) {
    HmtRecursion rec(x);
    for (long a = 1; a <= x; ++a) {
      for (long b = a + 1; b <= x; ++b) {
        for (long c = b + 1; c <= x; ++c) {
          const long k[3] = {a, b, c};
          EXPECT_EQ(poly_eval(g, x, k), rec.value(6, k));
        }
      }
    }
  }
}
