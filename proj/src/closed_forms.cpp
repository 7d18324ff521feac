#include "monotri/closed_forms.hpp"

#include <mutex>

#include "monotri/errors.hpp"

namespace monotri {

namespace {

void require_rows(int n, const char* what) {
  if (n < 1) throw InvalidInput(std::string(what) + ": need n >= 1, got " + std::to_string(n));
}

void require_args(int n, std::size_t got, std::size_t want) {
  if (got != want) {
    throw InvalidInput("n = " + std::to_string(n) + " takes " + std::to_string(want) + " bottom entries, got " +
                       std::to_string(got));
  }
}

MultiPoly kv(int m, int i) { return MultiPoly::variable(m, VarId::k(i)); }
MultiPoly xv(int m) { return MultiPoly::variable(m, VarId::x()); }
MultiPoly cst(int m, const Rational& c) { return MultiPoly::constant(m, c); }

// Shared shape of all the halved-triangle products:
//   prod_{i<j} (k_j - k_i + a(i,j)) (2x + b(i,j) - k_i - k_j) / den(i,j)
//   * [even n] prod_i (x + e(i) - k_i) / (norm ? i : 1)
struct ProductShape {
  bool diff_shift = false;  // a(i,j) = j - i instead of 0
  long sum_const = 0;       // b(i,j) = sum_const - (sum_ij ? i + j : 0)
  bool sum_ij = false;
  long lin_const = 0;       // e(i) = lin_const - (lin_i ? i : 0)
  bool lin_i = false;
  bool normalized = true;
};

MultiPoly halved_product(int n, const ProductShape& s) {
  const int m = hmt_arity(n);
  const bool even = n % 2 == 0;
  MultiPoly p = cst(m, 1);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      MultiPoly diff = kv(m, j) - kv(m, i) + Rational(s.diff_shift ? j - i : 0);
      const long b = s.sum_const - (s.sum_ij ? i + j : 0);
      MultiPoly sum = xv(m) * Rational(2) + Rational(b) - kv(m, i) - kv(m, j);
      p *= diff;
      p *= sum;
      if (s.normalized) p *= Rational(1, (j - i) * (even ? j + i : j + i - 1));
    }
  }
  if (even) {
    for (int i = 1; i <= m; ++i) {
      p *= xv(m) + Rational(s.lin_const - (s.lin_i ? i : 0)) - kv(m, i);
      if (s.normalized) p *= Rational(1, i);
    }
  }
  return p;
}

template <typename T>
Rational eval_at(const MultiPoly& p, long x, std::span<const T> k) {
  return poly_eval(p, x, k);
}

const ShiftOpExpr& cached_operator(OperatorKind kind, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, ShiftOpExpr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(kind), m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_operator(kind, m)).first;
  return it->second;
}

const std::vector<ShiftOpExpr>& cached_factors(OperatorKind kind, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<ShiftOpExpr>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(kind), m);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, operator_factors(kind, m)).first;
  return it->second;
}

std::vector<Rational> to_rationals(std::span<const long> k) { return {k.begin(), k.end()}; }

}  // namespace

MultiPoly beta_poly(int n) {
  require_rows(n, "beta");
  ProductShape s;
  s.diff_shift = true;
  s.sum_ij = true;
  s.sum_const = 2 + n;
  s.lin_i = true;
  s.lin_const = 1 + n / 2;
  return halved_product(n, s);
}

Rational beta(int n, const Rational& x, std::span<const Rational> k) {
  require_rows(n, "beta");
  const int m = hmt_arity(n);
  require_args(n, k.size(), static_cast<std::size_t>(m));
  Rational v = 1;
  const bool even = n % 2 == 0;
  for (int i = 1; i <= m; ++i) {
    const Rational& ki = k[static_cast<std::size_t>(i - 1)];
    for (int j = i + 1; j <= m; ++j) {
      const Rational& kj = k[static_cast<std::size_t>(j - 1)];
      v *= (kj - ki + (j - i)) * (2 * x + (2 + n - i - j) - ki - kj);
      v /= Rational((j - i) * (even ? j + i : j + i - 1));
    }
    if (even) v *= (x + (1 - i + n / 2) - ki) / Rational(i);
  }
  return v;
}

Rational beta(int n, long x, std::span<const long> k) {
  const auto kr = to_rationals(k);
  return beta(n, Rational(x), kr);
}

MultiPoly gamma_base(int n) {
  require_rows(n, "gamma_base");
  ProductShape s;
  s.sum_const = n % 2 ? 1 : 2;
  s.lin_const = 1;
  return halved_product(n, s);
}

MultiPoly base_unnormalized(int n) {
  require_rows(n, "base_unnormalized");
  ProductShape s;
  s.sum_const = n % 2 ? 1 : 2;
  s.lin_const = 1;
  s.normalized = false;
  return halved_product(n, s);
}

MultiPoly gamma_theorem1(int n) {
  require_rows(n, "gamma_theorem1");
  static std::mutex mu;
  static std::map<int, MultiPoly> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  // Computed outside the lock; two racing threads produce equal values.
  MultiPoly p = apply_factors(cached_factors(OperatorKind::THEOREM1, hmt_arity(n)), gamma_base(n));
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(n, std::move(p)).first->second;
}

BigInt gamma_value(int n, long x, std::span<const long> k) {
  require_rows(n, "gamma_value");
  require_args(n, k.size(), static_cast<std::size_t>(hmt_arity(n)));
  return to_integer(eval_at(gamma_theorem1(n), x, k), "gamma_value");
}

MultiPoly gamma_via_inverse_ops(int n, int degree_bound) {
  require_rows(n, "gamma_via_inverse_ops");
  if (degree_bound < 0) throw InvalidInput("degree bound must be nonnegative");
  const int m = hmt_arity(n);
  const MultiPoly base = gamma_base(n);
  const auto factors = operator_factors(OperatorKind::INVERSE_FORM, m, degree_bound);
  MultiPoly p = apply_factors(factors, base);
  const MultiPoly back = apply_factors(cached_factors(OperatorKind::NORMALIZER, m), p);
  if (!(back == base)) {
    throw InternalError("gamma_via_inverse_ops(" + std::to_string(n) + "): round trip failed with degree bound " +
                        std::to_string(degree_bound) + " (need at least " + std::to_string(n - 1) + ")");
  }
  return p;
}

Rational gamma_via_beta(int n, long x, std::span<const long> k) {
  require_rows(n, "gamma_via_beta");
  const int m = hmt_arity(n);
  require_args(n, k.size(), static_cast<std::size_t>(m));
  const Rational xr(x);
  IntFunction f = [n, &xr](std::span<const long> p) {
    const auto pr = to_rationals(p);
    return beta(n, xr, pr);
  };
  return apply_op_at(cached_operator(OperatorKind::BETA_TO_GAMMA, m), f, k);
}

MultiPoly gamma_star(int n) {
  require_rows(n, "gamma_star");
  return apply_factors(cached_factors(OperatorKind::V_PRODUCT, hmt_arity(n)), gamma_theorem1(n));
}

MultiPoly gamma_bar(int n) {
  require_rows(n, "gamma_bar");
  ProductShape s;
  s.sum_const = n % 2 ? 2 - n : 4 - n;
  s.lin_const = 2 - n / 2;
  return halved_product(n, s);
}

Rational gamma_via_gamma_bar(int n, long x, std::span<const long> k) {
  require_rows(n, "gamma_via_gamma_bar");
  const int m = hmt_arity(n);
  require_args(n, k.size(), static_cast<std::size_t>(m));
  const MultiPoly g = gamma_bar(n);
  IntFunction f = [&](std::span<const long> p) { return eval_at(g, x, p); };
  return apply_op_at(cached_operator(OperatorKind::GAMMA_BAR_TO_GAMMA, m), f, k);
}

MultiPoly alpha_poly(int n) {
  require_rows(n, "alpha_poly");
  MultiPoly v = cst(n, 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) v *= (kv(n, j) - kv(n, i)) * Rational(1, j - i);
  }
  return apply_factors(cached_factors(OperatorKind::ALPHA, n), v);
}

BigInt alpha_value(int n, std::span<const long> k) {
  require_rows(n, "alpha_value");
  require_args(n, k.size(), static_cast<std::size_t>(n));
  static std::mutex mu;
  static std::map<int, MultiPoly> memo;
  MultiPoly p;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it == memo.end()) it = memo.emplace(n, alpha_poly(n)).first;
    p = it->second;
  }
  return to_integer(eval_at(p, 0, k), "alpha_value");
}

BigInt asm_count(int n) {
  require_rows(n, "asm_count");
  Rational v = 1;
  for (int j = 0; j < n; ++j) {
    v *= Rational(factorial(static_cast<unsigned long>(3 * j + 1)), factorial(static_cast<unsigned long>(n + j)));
  }
  v.canonicalize();
  return to_integer(v, "asm_count");
}

BigInt vsasm_count(int n) {
  require_rows(n, "vsasm_count");
  BigInt pow2 = 1;
  pow2 <<= static_cast<unsigned long>(n);
  Rational v(factorial(static_cast<unsigned long>(n)), factorial(static_cast<unsigned long>(2 * n)) * pow2);
  v.canonicalize();
  for (int j = 1; j <= n; ++j) {
    Rational f(factorial(static_cast<unsigned long>(6 * j - 2)), factorial(static_cast<unsigned long>(2 * n + 2 * j - 1)));
    f.canonicalize();
    v *= f;
  }
  return to_integer(v, "vsasm_count");
}

Rational leading_constant(int n) {
  require_rows(n, "leading_constant");
  BigInt d = 1;
  for (int f = n - 1; f >= 1; f -= 2) d *= factorial(static_cast<unsigned long>(f));
  return make_rational(BigInt(1), d);
}

FallingFactorialExpansion falling_factorial_expansion(const MultiPoly& p) {
  const int m = p.arity();
  int top = 0;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 1; i <= m; ++i) top = std::max(top, e[static_cast<std::size_t>(i)]);
  }
  // Stirling numbers of the second kind: k^e = sum_j S(e, j) (k)_j.
  std::vector<std::vector<BigInt>> S(static_cast<std::size_t>(top + 1),
                                     std::vector<BigInt>(static_cast<std::size_t>(top + 1), 0));
  S[0][0] = 1;
  for (int e = 1; e <= top; ++e) {
    for (int j = 1; j <= e; ++j) {
      S[static_cast<std::size_t>(e)][static_cast<std::size_t>(j)] =
          j * S[static_cast<std::size_t>(e - 1)][static_cast<std::size_t>(j)] +
          S[static_cast<std::size_t>(e - 1)][static_cast<std::size_t>(j - 1)];
    }
  }

  FallingFactorialExpansion out;
  for (const auto& [e, c] : p.terms()) {
    Exponents xpart(static_cast<std::size_t>(m + 1), 0);
    xpart[0] = e[0];
    // Enumerate all j-vectors with 0 <= j_i <= e_i.
    std::vector<int> j(static_cast<std::size_t>(m), 0);
    while (true) {
      Rational coef = c;
      for (int i = 0; i < m; ++i) {
        coef *= S[static_cast<std::size_t>(e[static_cast<std::size_t>(i + 1)])][static_cast<std::size_t>(j[static_cast<std::size_t>(i)])];
      }
      if (coef != 0) {
        auto [it, fresh] = out.try_emplace(j, MultiPoly(m));
        it->second.add_term(xpart, coef);
      }
      int i = 0;
      for (; i < m; ++i) {
        auto& ji = j[static_cast<std::size_t>(i)];
        if (ji < e[static_cast<std::size_t>(i + 1)]) {
          ++ji;
          break;
        }
        ji = 0;
      }
      if (i == m) break;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

LeadingTerm leading_falling_factorial(const MultiPoly& p) {
  auto ff = falling_factorial_expansion(p);
  if (ff.empty()) throw InvalidInput("leading_falling_factorial: zero polynomial");
  auto it = std::prev(ff.end());
  return LeadingTerm{it->first, it->second};
}

}  // namespace monotri
