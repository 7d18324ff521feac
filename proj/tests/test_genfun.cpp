#include <gtest/gtest.h>

#include <map>

#include "monotri/closed_forms.hpp"
#include "monotri/errors.hpp"
#include "monotri/genfun.hpp"

using namespace monotri;

namespace {

using Series = std::map<long, BigInt>;

// Multiplies truncated series, dropping exponents outside [lo, hi].
Series mul(const Series& a, const Series& b, long lo, long hi) {
  Series out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      const long e = ea + eb;
      if (e >= lo && e <= hi) out[e] += ca * cb;
    }
  }
  return out;
}

// (X - 1)^{-N} = (sum_{j>=1} X^{-j})^N, materialized down to X^{-depth}.
Series inverse_power_in_1overx(int N, long depth) {
  Series geo;
  for (long j = 1; j <= depth; ++j) geo[-j] = 1;
  Series s{{0, 1}};
  for (int i = 0; i < N; ++i) s = mul(s, geo, -depth, 0);
  return s;
}

// (1 - X)^{-N} as a power series up to X^depth.
Series inverse_power_in_x(int N, long depth) {
  Series geo;
  for (long j = 0; j <= depth; ++j) geo[j] = 1;
  Series s{{0, 1}};
  for (int i = 0; i < N; ++i) s = mul(s, geo, 0, depth);
  return s;
}

BigInt lookup(const Series& s, long e) {
  auto it = s.find(e);
  return it == s.end() ? BigInt(0) : it->second;
}

}  // namespace

TEST(MtGfCoeff, Examples) {
  const long a[3] = {3, 2, 1}, b[3] = {-1, 2, 3}, c[3] = {0, 1, 2};
  EXPECT_EQ(mt_gf_coeff(3, a), -1);
  EXPECT_EQ(mt_gf_coeff(3, b), 7);
  EXPECT_EQ(mt_gf_coeff(3, c), 7);
  EXPECT_NE(mt_gf_coeff(3, b), alpha_value(3, b));
  EXPECT_THROW(mt_gf_coeff(3, std::span<const long>(a, 2)), InvalidInput);
}

TEST(MtGfCoeff, MaterializedSeriesOracle) {
  const int n = 3;
  const long depth = 16;
  const auto s = inverse_power_in_x(n, depth);
  const auto num = mt_numerator(n);
  for (long k1 = -2; k1 <= 3; ++k1) {
    for (long k2 = -2; k2 <= 3; ++k2) {
      for (long k3 = -2; k3 <= 3; ++k3) {
        const long k[3] = {k1, k2, k3};
        Rational total = 0;
        for (const auto& [e, c] : num.terms()) {
          Rational term = c;
          for (int i = 0; i < n; ++i) term *= Rational(lookup(s, k[i] + (n - 1) - e[static_cast<std::size_t>(i)]));
          total += term;
        }
        EXPECT_EQ(Rational(mt_gf_coeff(n, k)), total) << k1 << "," << k2 << "," << k3;
      }
    }
  }
}

TEST(AsmConstantTerm, Examples) {
  EXPECT_EQ(asm_constant_term(1), 1);
  EXPECT_EQ(asm_constant_term(3), 7);
  EXPECT_EQ(asm_constant_term(4), 42);
  EXPECT_THROW(asm_constant_term(0), InvalidInput);
}

TEST(HmtGfCoeff, Examples) {
  const long k3[1] = {3};
  EXPECT_EQ(hmt_gf_cutoff(2, 5), 6);
  EXPECT_EQ(hmt_gf_coeff(2, 5, k3).value, 3);
  const long k12[2] = {1, 2};
  EXPECT_EQ(hmt_gf_cutoff(3, 4), 3);
  EXPECT_EQ(hmt_gf_coeff(3, 4, k12).value, gamma_value(3, 4, k12));
  for (long k = -3; k <= 4; ++k) {
    const long kk[1] = {k};
    const auto r = hmt_gf_coeff(1, 4, kk);
    EXPECT_EQ(r.value, 1);
    EXPECT_TRUE(r.in_region);
  }
}

TEST(HmtGfCoeff, OutOfRegionIsFlagged) {
  const long k[1] = {9};
  const auto r = hmt_gf_coeff(1, 4, k);
  EXPECT_FALSE(r.in_region);
  EXPECT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(r.value, 0);
}

TEST(HmtGfCoeff, MaterializedSeriesOracle) {
  for (int n : {3, 4}) {
    const long x = 3;
    const long c = hmt_gf_cutoff(n, x);
    const auto inv = inverse_power_in_1overx(n, 30);
    const auto num = hmt_numerator(2);
    for (long k1 = c - 4; k1 <= c + 2; ++k1) {
      for (long k2 = c - 4; k2 <= c + 2; ++k2) {
        const long k[2] = {k1, k2};
        Rational total = 0;
        for (const auto& [e, coef] : num.terms()) {
          Rational term = coef;
          for (int i = 0; i < 2; ++i) term *= Rational(lookup(inv, k[i] - e[static_cast<std::size_t>(i)] - (c + 1)));
          total += term;
        }
        EXPECT_EQ(Rational(hmt_gf_coeff(n, x, k).value), total) << "n=" << n << " k=" << k1 << "," << k2;
      }
    }
  }
}

TEST(InversePower, MatchesMaterializedSeries) {
  for (int N = 0; N <= 5; ++N) {
    const auto s = inverse_power_in_1overx(N, 25);
    for (long e = -25; e <= 3; ++e) EXPECT_EQ(inverse_power_coeff_1overx(N, e), lookup(s, e)) << N << " " << e;
  }
}

TEST(GfCoeff, Dispatch) {
  GfQuery q;
  q.family = GfFamily::MT;
  q.n = 3;
  q.exponents = {3, 2, 1};
  EXPECT_EQ(gf_coeff(q).value, -1);
  q.family = GfFamily::ASM_CONSTANT_TERM;
  EXPECT_THROW(gf_coeff(q), InvalidInput);
  q.exponents.clear();
  EXPECT_EQ(gf_coeff(q).value, 7);
  q.family = GfFamily::HMT;
  q.exponents = {1, 2};
  EXPECT_THROW(gf_coeff(q), InvalidInput);
  q.x = 3;
  EXPECT_EQ(gf_coeff(q).value, 5);
  EXPECT_EQ(parse_gf_family("asm-constant-term"), GfFamily::ASM_CONSTANT_TERM);
  EXPECT_FALSE(parse_gf_family("other"));
  EXPECT_EQ(to_string(GfFamily::HMT), "hmt");
}

TEST(BinomDeterminant, Examples) {
  const Rational k1[1] = {Rational(7)};
  EXPECT_EQ(binom_determinant(1, k1), 7);
  EXPECT_EQ(binom_determinant_product(1, k1), 7);
  EXPECT_EQ(binom_determinant(2, k1), 1);
  EXPECT_EQ(binom_determinant_product(2, k1), 1);
  const Rational k12[2] = {Rational(1), Rational(2)};
  EXPECT_EQ(binom_determinant(1, k12), 1);
  EXPECT_EQ(binom_determinant_product(1, k12), 1);
  EXPECT_THROW(binom_determinant(3, k12), InvalidInput);
}

TEST(BinomDeterminant, SymbolicUpToFour) {
  for (int kind = 1; kind <= 2; ++kind) {
    for (int n = 1; n <= 4; ++n) {
      EXPECT_EQ(binom_determinant_symbolic(kind, n), binom_determinant_product_symbolic(kind, n)) << kind << " " << n;
    }
  }
}

TEST(DetRational, Basics) {
  EXPECT_EQ(det_rational({{Rational(2), Rational(1)}, {Rational(4), Rational(3)}}), 2);
  EXPECT_EQ(det_rational({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}), -1);
  EXPECT_THROW(det_rational({{Rational(1), Rational(2)}}), InvalidInput);
}

TEST(SeriesIdentity, Examples) {
  for (long c : {-3L, 0L, 5L}) {
    EXPECT_TRUE(series_identity_check(Parity::Odd, 1, -2, c, 10));
    EXPECT_TRUE(series_identity_check(Parity::Even, 1, -1, c, 10));
  }
  EXPECT_THROW(series_identity_check(Parity::Odd, 2, 5, 0, 10), InvalidInput);
  EXPECT_THROW(series_identity_check(Parity::Even, 2, -4, 0, 10), InvalidInput);
}

TEST(SeriesIdentity, WideWindows) {
  for (int j = 1; j <= 5; ++j) {
    for (long z = -j - 1; z <= j - 3; ++z) EXPECT_TRUE(series_identity_check(Parity::Odd, j, z, 2, 24));
    for (long z = -j - 1; z <= j - 2; ++z) EXPECT_TRUE(series_identity_check(Parity::Even, j, z, 2, 24));
  }
}
