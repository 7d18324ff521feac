#include "monotri/genfun.hpp"

#include <algorithm>
#include <mutex>
#include <map>

#include "monotri/errors.hpp"

namespace monotri {

namespace {

BigInt binom_ui(long top, long bottom) {
  BigInt b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return b;
}

// Coefficient of X^t in (1 - X)^{-n}, n >= 1.
BigInt neg_binom_coeff(int n, long t) {
  if (t < 0) return 0;
  return binom_ui(t + n - 1, n - 1);
}

const LaurentPoly& cached(std::map<int, LaurentPoly>& cache, std::mutex& mu, int n, LaurentPoly (*make)(int)) {
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make(n)).first;
  return it->second;
}

const LaurentPoly& mt_numerator_cached(int n) {
  static std::mutex mu;
  static std::map<int, LaurentPoly> cache;
  return cached(cache, mu, n, &mt_numerator);
}

const LaurentPoly& hmt_numerator_cached(int m) {
  static std::mutex mu;
  static std::map<int, LaurentPoly> cache;
  return cached(cache, mu, m, &hmt_numerator);
}

}  // namespace

LaurentPoly mt_numerator(int n) {
  if (n < 1) throw InvalidInput("mt_numerator: n must be positive");
  const auto one = LaurentPoly::identity(n);
  LaurentPoly p = one;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto Xi = LaurentPoly::shift(n, i);
      const auto Xj = LaurentPoly::shift(n, j);
      p = p * (Xj - Xi);
      p = p * (one - Xj + Xi * Xj);
    }
  }
  return p;
}

LaurentPoly hmt_numerator(int m) {
  if (m < 1) throw InvalidInput("hmt_numerator: m must be positive");
  const auto one = LaurentPoly::identity(m);
  LaurentPoly p = one;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      const auto Xi = LaurentPoly::shift(m, i);
      const auto Xj = LaurentPoly::shift(m, j);
      p = p * (Xj - Xi);
      p = p * (Xi + Xj - one);
      p = p * (Xi * Xj - one);
      p = p * (one - Xj + Xi * Xj);
    }
  }
  return p;
}

BigInt mt_gf_coeff(int n, std::span<const long> k) {
  if (n < 1) throw InvalidInput("mt_gf_coeff: n must be positive");
  if (k.size() != static_cast<std::size_t>(n)) {
    throw InvalidInput("mt_gf_coeff: expected " + std::to_string(n) + " exponents, got " + std::to_string(k.size()));
  }
  BigInt total = 0;
  for (const auto& [a, c] : mt_numerator_cached(n).terms()) {
    BigInt prod = to_integer(c, "mt numerator");
    for (int i = 0; i < n && prod != 0; ++i) {
      prod *= neg_binom_coeff(n, k[static_cast<std::size_t>(i)] + n - 1 - a[static_cast<std::size_t>(i)]);
    }
    total += prod;
  }
  return total;
}

BigInt asm_constant_term(int n) {
  if (n < 1) throw InvalidInput("asm_constant_term: n must be positive");
  BigInt total = 0;
  for (const auto& [a, c] : mt_numerator_cached(n).terms()) {
    BigInt prod = to_integer(c, "mt numerator");
    for (int i = 1; i <= n && prod != 0; ++i) {
      prod *= neg_binom_coeff(n, n + i - 2 - a[static_cast<std::size_t>(i - 1)]);
    }
    total += prod;
  }
  return total;
}

long hmt_gf_cutoff(int n, long x) {
  if (n < 1) throw InvalidInput("hmt_gf_cutoff: n must be positive");
  return n % 2 ? x + (1 - n) / 2 : x + 2 - n / 2;
}

BigInt inverse_power_coeff_1overx(int N, long s) {
  if (N < 0) throw InvalidInput("inverse_power_coeff_1overx: negative power");
  if (N == 0) return s == 0 ? 1 : 0;
  if (s > -N) return 0;
  return binom_ui(-s - 1, N - 1);
}

HmtGfCoeff hmt_gf_coeff(int n, long x, std::span<const long> k) {
  const int m = (n + 1) / 2;
  if (n < 1) throw InvalidInput("hmt_gf_coeff: n must be positive");
  if (k.size() != static_cast<std::size_t>(m)) {
    throw InvalidInput("hmt_gf_coeff: expected " + std::to_string(m) + " exponents, got " + std::to_string(k.size()));
  }
  const long c = hmt_gf_cutoff(n, x);
  HmtGfCoeff out;
  out.value = 0;
  for (long v : k) {
    if (v > c) out.in_region = false;
  }
  if (!out.in_region) {
    out.warnings.push_back("exponent above c = " + std::to_string(c) +
                           "; returning the formal coefficient, which need not count halved triangles");
  }
  for (const auto& [a, coef] : hmt_numerator_cached(m).terms()) {
    BigInt prod = to_integer(coef, "hmt numerator");
    for (int i = 0; i < m && prod != 0; ++i) {
      prod *= inverse_power_coeff_1overx(n, k[static_cast<std::size_t>(i)] - a[static_cast<std::size_t>(i)] - (c + 1));
    }
    out.value += prod;
  }
  return out;
}

std::string to_string(GfFamily f) {
  switch (f) {
    case GfFamily::MT: return "mt";
    case GfFamily::HMT: return "hmt";
    case GfFamily::ASM_CONSTANT_TERM: return "asm-constant-term";
  }
  return "unknown";
}

std::optional<GfFamily> parse_gf_family(const std::string& name) {
  for (auto f : {GfFamily::MT, GfFamily::HMT, GfFamily::ASM_CONSTANT_TERM}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

GfResult gf_coeff(const GfQuery& q) {
  if (q.n < 1) throw InvalidInput("generating function queries need n >= 1");
  GfResult r;
  switch (q.family) {
    case GfFamily::MT:
      r.value = mt_gf_coeff(q.n, q.exponents);
      break;
    case GfFamily::ASM_CONSTANT_TERM:
      if (!q.exponents.empty()) throw InvalidInput("the constant-term query takes no exponents");
      r.value = asm_constant_term(q.n);
      break;
    case GfFamily::HMT: {
      if (!q.x) throw InvalidInput("halved generating function needs x");
      auto h = hmt_gf_coeff(q.n, *q.x, q.exponents);
      r.value = h.value;
      r.warnings = std::move(h.warnings);
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

Rational det_rational(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidInput("det_rational: matrix is not square");
  }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

MultiPoly det_poly(const std::vector<std::vector<MultiPoly>>& a) {
  const std::size_t n = a.size();
  if (n == 0) throw InvalidInput("det_poly: empty matrix");
  for (const auto& row : a) {
    if (row.size() != n) throw InvalidInput("det_poly: matrix is not square");
  }
  const int arity = a[0][0].arity();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  MultiPoly det(arity);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    MultiPoly term = MultiPoly::constant(arity, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= a[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

MultiPoly binomial_poly(const MultiPoly& form, int m) {
  if (m < 0) return MultiPoly(form.arity());
  if (poly_total_degree(form) > 1) throw InvalidInput("binomial_poly: form is not affine");
  MultiPoly p = MultiPoly::constant(form.arity(), 1);
  for (int t = 0; t < m; ++t) p *= form - Rational(t);
  return p * Rational(1, factorial(static_cast<unsigned long>(m)));
}

namespace {

void check_kind(int kind) {
  if (kind != 1 && kind != 2) throw InvalidInput("determinant kind must be 1 or 2");
}

// Upper argument offset and lower index of entry (i, j), 1-based j.
Rational entry_offset(int kind, int j) { return kind == 1 ? Rational(j - 1) : Rational(2 * j - 3, 2); }
int entry_lower(int kind, int j) { return kind == 1 ? 2 * j - 1 : 2 * j - 2; }

}  // namespace

Rational binom_determinant(int kind, std::span<const Rational> k) {
  check_kind(kind);
  const std::size_t n = k.size();
  if (n == 0) return 1;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (int j = 1; j <= static_cast<int>(n); ++j) {
      a[i][static_cast<std::size_t>(j - 1)] = generalized_binomial(k[i] + entry_offset(kind, j), entry_lower(kind, j));
    }
  }
  return det_rational(std::move(a));
}

Rational binom_determinant_product(int kind, std::span<const Rational> k) {
  check_kind(kind);
  const int n = static_cast<int>(k.size());
  Rational v = 1;
  for (int i = 1; i <= n; ++i) {
    const Rational& ki = k[static_cast<std::size_t>(i - 1)];
    for (int j = i + 1; j <= n; ++j) {
      const Rational& kj = k[static_cast<std::size_t>(j - 1)];
      v *= (kj - ki) * (ki + kj) / Rational((j - i) * (kind == 1 ? j + i : j + i - 1));
    }
    if (kind == 1) v *= ki / Rational(i);
  }
  return v;
}

MultiPoly binom_determinant_symbolic(int kind, int n) {
  check_kind(kind);
  if (n < 1) throw InvalidInput("binom_determinant_symbolic: n must be positive");
  std::vector<std::vector<MultiPoly>> a(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const MultiPoly ki = MultiPoly::variable(n, VarId::k(i));
    for (int j = 1; j <= n; ++j) {
      a[static_cast<std::size_t>(i - 1)].push_back(binomial_poly(ki + entry_offset(kind, j), entry_lower(kind, j)));
    }
  }
  return det_poly(a);
}

MultiPoly binom_determinant_product_symbolic(int kind, int n) {
  check_kind(kind);
  if (n < 1) throw InvalidInput("binom_determinant_product_symbolic: n must be positive");
  MultiPoly v = MultiPoly::constant(n, 1);
  for (int i = 1; i <= n; ++i) {
    const MultiPoly ki = MultiPoly::variable(n, VarId::k(i));
    for (int j = i + 1; j <= n; ++j) {
      const MultiPoly kj = MultiPoly::variable(n, VarId::k(j));
      v *= (kj - ki) * (ki + kj) * Rational(1, (j - i) * (kind == 1 ? j + i : j + i - 1));
    }
    if (kind == 1) v *= ki * Rational(1, i);
  }
  return v;
}

// ---------------------------------------------------------------------------

bool series_identity_check(Parity parity, int j, long z, long c, int window) {
  if (j < 1) throw InvalidInput("series identity: j must be positive");
  if (window < 1) throw InvalidInput("series identity: window must be positive");
  const long zmax = parity == Parity::Odd ? j - 3 : j - 2;
  if (z < -j - 1 || z > zmax) {
    throw InvalidInput("series identity: z = " + std::to_string(z) + " outside [" + std::to_string(-j - 1) + ", " +
                       std::to_string(zmax) + "]");
  }
  const int lower = parity == Parity::Odd ? 2 * j - 2 : 2 * j - 1;
  const int power = parity == Parity::Odd ? 2 * j - 1 : 2 * j;
  const long shift = parity == Parity::Odd ? j + c - z - 2 : j + c - z - 1;
  const int sign = parity == Parity::Odd ? 1 : -1;
  for (long l = c - window + 1; l <= c + window; ++l) {
    const Rational lhs = l <= c ? generalized_binomial(Rational(l + j - c + z), lower) : Rational(0);
    const Rational rhs = sign * Rational(inverse_power_coeff_1overx(power, l - shift));
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace monotri
