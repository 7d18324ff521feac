#include <gtest/gtest.h>

#include <random>

#include "monotri/errors.hpp"
#include "monotri/multipoly.hpp"
#include "monotri/rational.hpp"

using namespace monotri;

namespace {

MultiPoly P(const char* s, int arity) { return parse_poly(s, arity); }

MultiPoly random_poly(std::mt19937_64& rng, int arity) {
  std::uniform_int_distribution<int> deg(0, 3), coef(-6, 6), terms(0, 5);
  MultiPoly p(arity);
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    Exponents e(static_cast<std::size_t>(arity + 1));
    for (auto& v : e) v = deg(rng);
    p.add_term(e, make_rational(coef(rng), std::uniform_int_distribution<long>(1, 3)(rng)));
  }
  return p;
}

}  // namespace

TEST(PolyAdd, Examples) {
  EXPECT_EQ(P("k1 + x", 1) + P("x - k1", 1), P("2*x", 1));
  const auto p = P("3*k1^2 - x + 1/2", 1);
  EXPECT_EQ(p + MultiPoly(1), p);
  EXPECT_TRUE((P("k2 - k1", 2) + P("k1 - k2", 2)).is_zero());
}

TEST(PolyAdd, ArityMismatch) {
  EXPECT_THROW(poly_add(P("k1", 1), P("k1", 2)), InvalidInput);
  EXPECT_THROW(poly_mul(P("k1", 1), P("k1", 2)), InvalidInput);
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(P("k2 - k1", 2) * P("k2 + k1", 2), P("k2^2 - k1^2", 2));
  const auto p = P("x*k1 - k2 + 4", 2);
  EXPECT_EQ(p * MultiPoly::constant(2, 1), p);
  EXPECT_TRUE((p * MultiPoly(2)).is_zero());
}

TEST(PolyEval, Examples) {
  const long k12[2] = {1, 2};
  EXPECT_EQ(poly_eval(P("1/2 (2x+2-k1-k2) (k2-k1+1)", 2), 3, k12), 5);
  const long k3[1] = {3};
  EXPECT_EQ(poly_eval(P("x - k1 + 1", 1), 5, k3), 3);
  EXPECT_EQ(poly_eval(MultiPoly(2), 7, k12), 0);
}

TEST(PolyEval, MissingVariable) {
  Point pt{{VarId::x(), Rational(1)}};
  EXPECT_THROW(poly_eval(P("x + k1", 1), pt), InvalidInput);
  pt[VarId::k(1)] = 4;
  EXPECT_EQ(poly_eval(P("x + k1", 1), pt), 5);
}

TEST(PolyShift, Examples) {
  EXPECT_EQ(poly_shift(P("k1^2", 1), VarId::k(1), 1), P("k1^2 + 2 k1 + 1", 1));
  const auto p = P("k1^3 x - k1", 1);
  EXPECT_EQ(poly_shift(p, VarId::k(1), 0), p);
  EXPECT_EQ(poly_shift(P("x - k1 + 1", 1), VarId::k(1), -1), P("x - k1 + 2", 1));
}

TEST(PolySubstitute, Examples) {
  const auto refl2 = P("2x + 2 - k2", 2);
  EXPECT_EQ(poly_substitute_linear(P("x + 1 - k2", 2), VarId::k(2), refl2), P("k2 - x - 1", 2));
  const auto p = P("k1^2 k2 - 3 x", 2);
  EXPECT_EQ(poly_substitute_linear(p, VarId::k(1), P("k1", 2)), p);
  EXPECT_EQ(poly_substitute_linear(P("2x + 1 - k1 - k2", 2), VarId::k(1), P("2x + 1 - k1", 2)), P("k1 - k2", 2));
}

TEST(PolySubstitute, RejectsNonAffineForm) {
  EXPECT_THROW(poly_substitute_linear(P("k1", 1), VarId::k(1), P("k1^2", 1)), InvalidInput);
}

TEST(PolyDegree, Examples) {
  EXPECT_EQ(poly_degree_in(P("k1^2 k2 + x", 2), VarId::k(1)), 2);
  EXPECT_EQ(poly_degree_in(P("7", 1), VarId::k(1)), 0);
  EXPECT_EQ(poly_degree_in(MultiPoly(1), VarId::x()), -1);
}

TEST(GeneralizedBinomial, Examples) {
  EXPECT_EQ(generalized_binomial(5, 2), 10);
  EXPECT_EQ(generalized_binomial(make_rational(1, 2), 2), make_rational(-1, 8));
  EXPECT_EQ(generalized_binomial(-1, 3), -1);
  EXPECT_EQ(generalized_binomial(make_rational(7, 3), 0), 1);
}

TEST(Rational, ZeroDenominator) { EXPECT_THROW(make_rational(1, 0), InvalidInput); }

TEST(Serialization, CanonicalText) {
  EXPECT_EQ(to_string(P("1 + x - k1", 1)), "x - k1 + 1");
  EXPECT_EQ(to_string(MultiPoly(3)), "0");
  EXPECT_EQ(to_string(P("k2^2 - k1^2", 2)), "-k1^2 + k2^2");
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_poly("k1 +", 1), InvalidInput);
  EXPECT_THROW(parse_poly("k3", 2), InvalidInput);
  EXPECT_THROW(parse_poly("(k1", 1), InvalidInput);
}

TEST(PolyProperties, RingAxioms) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const auto a = random_poly(rng, 2), b = random_poly(rng, 2), c = random_poly(rng, 2);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(PolyProperties, ShiftCommutesWithEvaluation) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> val(-6, 6);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_poly(rng, 3);
    const long s = val(rng);
    const int i = static_cast<int>(val(rng) % 3 + 3) % 3 + 1;
    long k[3] = {val(rng), val(rng), val(rng)};
    const long x = val(rng);
    const Rational lhs = poly_eval(poly_shift(p, VarId::k(i), s), x, k);
    k[i - 1] += s;
    EXPECT_EQ(lhs, poly_eval(p, x, k));
    EXPECT_EQ(poly_shift(poly_shift(p, VarId::k(i), s), VarId::k(i), -s), p);
  }
}

TEST(PolyProperties, InvolutiveSubstitution) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_poly(rng, 2);
    for (int i = 1; i <= 2; ++i) {
      const auto form = P(i == 1 ? "2x + 2 - k1" : "2x + 2 - k2", 2);
      EXPECT_EQ(poly_substitute_linear(poly_substitute_linear(p, VarId::k(i), form), VarId::k(i), form), p);
    }
  }
}

TEST(PolyProperties, TextRoundTrip) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const auto p = random_poly(rng, 3);
    const auto text = to_string(p);
    EXPECT_EQ(parse_poly(text, 3), p) << text;
    EXPECT_EQ(to_string(parse_poly(text, 3)), text);
  }
}
