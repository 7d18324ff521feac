#include "monotri/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "monotri/brute.hpp"
#include "monotri/closed_forms.hpp"
#include "monotri/errors.hpp"
#include "monotri/genfun.hpp"
#include "monotri/shift_op.hpp"

namespace monotri {

// ---------------------------------------------------------------------------
// Pointwise operators on function tables

Rational v_at(const IntFunction& f, std::span<const long> p, int a, int b) {
  std::vector<long> q(p.begin(), p.end());
  const Rational base = f(q);
  q[static_cast<std::size_t>(b)] += 1;
  const Rational shifted_b = f(q);
  q[static_cast<std::size_t>(a)] += 1;
  const Rational shifted_ab = f(q);
  return base + shifted_ab - shifted_b;
}

Rational t_at(const IntFunction& f, std::span<const long> p, int a, int b) {
  std::vector<long> q(p.begin(), p.end());
  std::swap(q[static_cast<std::size_t>(a)], q[static_cast<std::size_t>(b)]);
  return v_at(f, p, a, b) + v_at(f, q, a, b);
}

namespace {

// Triple sum with the signed-range convention on every level.
Rational sum3(long a1, long b1, long a2, long b2, long a3, long b3, const std::function<Rational(long, long, long)>& f) {
  return range_sum(a1, b1, [&](long l1) {
    return range_sum(a2, b2, [&](long l2) { return range_sum(a3, b3, [&](long l3) { return f(l1, l2, l3); }); });
  });
}

Rational sum2(long a1, long b1, long a2, long b2, const std::function<Rational(long, long)>& f) {
  return range_sum(a1, b1, [&](long l1) { return range_sum(a2, b2, [&](long l2) { return f(l1, l2); }); });
}

// Sum over a group of consecutive variables with the given bounds; a single
// bound means the group has no variables.
Rational group_sum(std::span<const long> bounds, const IntFunction& f) {
  if (bounds.size() == 1) return f({});
  return extended_sum(f, bounds);
}

}  // namespace

Rational t_identity_lhs(const IntFunction& f, std::span<const long> k) {
  if (k.size() != 4) throw InvalidInput("t_identity_lhs: need four bounds");
  IntFunction g = [&](std::span<const long> kk) { return extended_sum(f, kk); };
  return t_at(g, k, 1, 2);
}

Rational t_identity_rhs(const IntFunction& f, std::span<const long> k) {
  if (k.size() != 4) throw InvalidInput("t_identity_rhs: need four bounds");
  const long k1 = k[0], k2 = k[1], k3 = k[2], k4 = k[3];
  auto T12 = [&](long l1, long l2, long l3) {
    const long p[3] = {l1, l2, l3};
    return t_at(f, p, 0, 1);
  };
  auto T23 = [&](long l1, long l2, long l3) {
    const long p[3] = {l1, l2, l3};
    return t_at(f, p, 1, 2);
  };
  const Rational half(1, 2);

  Rational a = sum3(k2 + 1, k3, k2 + 1, k3, k2, k4, T12) + sum3(k1, k2 + 1, k2, k3 - 1, k2, k3 - 1, T23);

  // Delta_{l2} (id + E_{l1}) applied to (l1, l2) -> T12(l1, l2, k2).
  auto first = [&](long l1, long l2) -> Rational {
    auto h = [&](long u1, long u2) -> Rational { return T12(u1, u2, k2) + T12(u1 + 1, u2, k2); };
    return h(l1, l2 + 1) - h(l1, l2);
  };
  // Delta_{l2} (id + E_{l3}) applied to (l2, l3) -> T23(k2 + 1, l2, l3).
  auto second = [&](long l2, long l3) -> Rational {
    auto h = [&](long u2, long u3) -> Rational { return T23(k2 + 1, u2, u3) + T23(k2 + 1, u2, u3 + 1); };
    return h(l2 + 1, l3) - h(l2, l3);
  };
  Rational b = sum2(k2, k3 - 1, k2, k3 - 1, first) - sum2(k2, k3 - 1, k2, k3 - 1, second);

  Rational c = T12(k2, k2, k2 + 1) - T12(k2, k2, k3 + 1) + T23(k2, k2, k2) - T23(k3, k2, k2);
  Rational d = -T12(k2, k3, k2 + 1) - T23(k2, k2, k3);

  return -half * a + half * b + half * c + d;
}

Rational t_identity_two_var_lhs(const IntFunction& h, std::span<const long> k) {
  if (k.size() != 3) throw InvalidInput("t_identity_two_var_lhs: need three bounds");
  IntFunction g = [&](std::span<const long> kk) { return extended_sum(h, kk); };
  return t_at(g, k, 0, 1);
}

Rational t_identity_two_var_rhs(const IntFunction& h, std::span<const long> k) {
  if (k.size() != 3) throw InvalidInput("t_identity_two_var_rhs: need three bounds");
  auto T = [&](long l1, long l2) {
    const long p[2] = {l1, l2};
    return t_at(h, p, 0, 1);
  };
  return Rational(-1, 2) * sum2(k[0], k[1] - 1, k[0], k[1] - 1, T);
}

Rational merge_lhs(const IntFunction& a, std::span<const long> k) { return extended_sum(a, k); }

Rational merge_rhs(const IntFunction& a, std::span<const long> k, int i) {
  const int m = static_cast<int>(k.size());
  if (i < 2 || i > m - 2) throw InvalidInput("merge_rhs: need 2 <= i <= m - 2");
  auto K = [&](int idx) { return k[static_cast<std::size_t>(idx - 1)]; };

  // F(w, x, y, z): the three independent group sums.
  auto F = [&](long w, long x, long y, long z) {
    std::vector<long> first;
    for (int t = 1; t <= i - 2; ++t) first.push_back(K(t));
    first.push_back(w);
    const std::vector<long> middle{x, K(i), K(i + 1), y};
    std::vector<long> last{z};
    for (int t = i + 3; t <= m; ++t) last.push_back(K(t));

    IntFunction outer = [&](std::span<const long> l_first) {
      IntFunction mid = [&](std::span<const long> l_mid) {
        IntFunction inner = [&](std::span<const long> l_last) {
          std::vector<long> all(l_first.begin(), l_first.end());
          all.insert(all.end(), l_mid.begin(), l_mid.end());
          all.insert(all.end(), l_last.begin(), l_last.end());
          return a(all);
        };
        return group_sum(last, inner);
      };
      return group_sum(middle, mid);
    };
    return group_sum(first, outer);
  };

  // I^y_{u,v} g(u, v) = g(y-1, y) + g(y, y+1) - g(y-1, y+1).
  const std::pair<long, long> offsets[3] = {{-1, 0}, {0, 1}, {-1, 1}};
  const int signs[3] = {1, 1, -1};
  const long y1 = K(i - 1);
  const long y2 = K(i + 2);
  Rational total = 0;
  for (int s = 0; s < 3; ++s) {
    for (int t = 0; t < 3; ++t) {
      total += signs[s] * signs[t] *
               F(y1 + offsets[s].first, y1 + offsets[s].second, y2 + offsets[t].first, y2 + offsets[t].second);
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Suites

bool VerifyReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed(); });
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names{"all", "asm", "genfun", "operators", "recursion", "symmetry"};
  return names;
}

namespace {

using Rng = std::mt19937_64;

// FNV-1a; std::hash is not stable across standard libraries.
std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ULL;
  return h;
}

class Property {
 public:
  Property(std::string name, std::uint64_t seed) : rng_(seed ^ name_hash(name)) { r_.name = std::move(name); }

  Rng& rng() { return rng_; }
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.instances;
    if (ok) return;
    ++r_.failures;
    if (!r_.counterexample) r_.counterexample = describe();
  }

  PropertyResult done() { return std::move(r_); }

 private:
  Rng rng_;
  PropertyResult r_;
};

std::string join(std::span<const long> v) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ')';
  return out.str();
}

// All strictly increasing tuples of length m with entries in [lo, hi].
void for_each_strict(int m, long lo, long hi, const std::function<void(const std::vector<long>&)>& fn) {
  std::vector<long> k(static_cast<std::size_t>(m));
  std::function<void(int, long)> rec = [&](int pos, long from) {
    if (pos == m) {
      fn(k);
      return;
    }
    for (long v = from; v <= hi - (m - 1 - pos); ++v) {
      k[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, lo);
}

std::vector<long> random_tuple(Property& p, int m, long lo, long hi) {
  std::vector<long> k(static_cast<std::size_t>(m));
  for (auto& v : k) v = p.uniform(lo, hi);
  return k;
}

MultiPoly random_poly(Property& p, int arity, int max_deg, int terms, bool with_x) {
  MultiPoly out(arity);
  for (int t = 0; t < terms; ++t) {
    Exponents e(static_cast<std::size_t>(arity + 1), 0);
    if (with_x) e[0] = static_cast<int>(p.uniform(0, 1));
    for (int i = 1; i <= arity; ++i) e[static_cast<std::size_t>(i)] = static_cast<int>(p.uniform(0, max_deg));
    out.add_term(e, Rational(p.uniform(-5, 5)));
  }
  return out;
}

ShiftOpExpr random_op(Property& p, int arity, int terms, bool invertible) {
  while (true) {
    ShiftOpExpr a(arity);
    for (int t = 0; t < terms; ++t) {
      ShiftOpExpr::Key e(static_cast<std::size_t>(arity));
      for (auto& v : e) v = static_cast<int>(p.uniform(-2, 2));
      a.add_term(e, Rational(p.uniform(-4, 4)));
    }
    Rational sum = 0;
    for (const auto& [k, c] : a.terms()) sum += c;
    if (!invertible || sum != 0) return a;
  }
}

// prod_{i<j} (k_j - k_i).
MultiPoly vandermonde(int m) {
  MultiPoly v = MultiPoly::constant(m, 1);
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) v *= MultiPoly::variable(m, VarId::k(j)) - MultiPoly::variable(m, VarId::k(i));
  }
  return v;
}

MultiPoly symmetrize(const MultiPoly& q) {
  const int m = q.arity();
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);
  MultiPoly out(m);
  do {
    MultiPoly t(m);
    for (const auto& [e, c] : q.terms()) {
      Exponents f = e;
      for (int i = 1; i <= m; ++i) f[static_cast<std::size_t>(perm[static_cast<std::size_t>(i - 1)])] = e[static_cast<std::size_t>(i)];
      t.add_term(f, c);
    }
    out += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

ShiftOpExpr symmetrize(const ShiftOpExpr& a) {
  const int m = a.arity();
  std::vector<int> perm(static_cast<std::size_t>(m));
  std::iota(perm.begin(), perm.end(), 1);
  ShiftOpExpr out(m);
  do {
    out += permute_symbols(a, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool antisymmetric(const MultiPoly& p) {
  for (int i = 1; i < p.arity(); ++i) {
    if (!(swap_vars(p, i, i + 1) == -p)) return false;
  }
  return true;
}

MultiPoly reflect(const MultiPoly& p, int i, long shift_const) {
  const int m = p.arity();
  const MultiPoly form = MultiPoly::variable(m, VarId::x()) * Rational(2) + Rational(shift_const) -
                         MultiPoly::variable(m, VarId::k(i));
  return poly_substitute_linear(p, VarId::k(i), form);
}

struct Ctx {
  const VerifyOptions& opts;
  std::vector<PropertyResult>& out;

  Property make(const std::string& name) const { return Property(name, opts.seed); }
  void add(Property& p) const { out.push_back(p.done()); }
};

// --- recursion ---------------------------------------------------------------

void suite_recursion(const Ctx& ctx) {
  const int R = ctx.opts.max_rows;
  const int X = ctx.opts.max_x;
  {
    auto p = ctx.make("recursion.brute_equals_recursion");
    for (int n = 1; n <= R; ++n) {
      for (long x = 1; x <= X; ++x) {
        HmtRecursion rec(x);
        for_each_strict(hmt_arity(n), 1, x, [&](const std::vector<long>& k) {
          const BigInt b = count_hmt_brute(n, x, k);
          const Rational r = rec.value(n, k);
          p.check(Rational(b) == r, [&] {
            return "n=" + std::to_string(n) + " x=" + std::to_string(x) + " k=" + join(k) + " brute=" + to_string(b) +
                   " recursion=" + to_string(r);
          });
        });
      }
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("recursion.cross_method_equality");
    for (int n = 1; n <= R; ++n) {
      for (long x = 1; x <= X; ++x) {
        HmtRecursion rec(x);
        for_each_strict(hmt_arity(n), 1, x, [&](const std::vector<long>& k) {
          const Rational b(count_hmt_brute(n, x, k));
          const Rational r = rec.value(n, k);
          const Rational t(gamma_value(n, x, k));
          const Rational vb = gamma_via_beta(n, x, k);
          const Rational vg = gamma_via_gamma_bar(n, x, k);
          p.check(b == r && b == t && b == vb && b == vg, [&] {
            return "n=" + std::to_string(n) + " x=" + std::to_string(x) + " k=" + join(k) + " brute=" + to_string(b) +
                   " recursion=" + to_string(r) + " theorem=" + to_string(t) + " beta=" + to_string(vb) +
                   " gamma_bar=" + to_string(vg);
          });
        });
      }
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("recursion.extended_matches_polynomial");
    for (int t = 0; t < ctx.opts.instances; ++t) {
      const int n = static_cast<int>(p.uniform(1, std::min(R, 6)));
      const long x = p.uniform(0, X);
      const auto k = random_tuple(p, hmt_arity(n), -3, x + 4);
      const Rational r = gamma_recursive(n, x, k, true);
      const Rational v(gamma_value(n, x, k));
      p.check(r == v, [&] {
        return "n=" + std::to_string(n) + " x=" + std::to_string(x) + " k=" + join(k) + " recursion=" + to_string(r) +
               " polynomial=" + to_string(v);
      });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("recursion.weak_count_equals_beta");
    for (int n = 1; n <= R; ++n) {
      for (long x = 1; x <= X; ++x) {
        for_each_strict(hmt_arity(n), 1, x, [&](const std::vector<long>& k) {
          const BigInt w = count_weak_hmt_brute(n, x, k);
          const Rational b = beta(n, x, k);
          p.check(Rational(w) == b, [&] {
            return "n=" + std::to_string(n) + " x=" + std::to_string(x) + " k=" + join(k) + " weak=" + to_string(w) +
                   " beta=" + to_string(b);
          });
        });
      }
    }
    ctx.add(p);
  }
  {
    // On increasing bounds the extended sum is the plain sum over strictly
    // increasing interleaving sequences.
    auto p = ctx.make("recursion.extended_sum_interleavings");
    for (int t = 0; t < ctx.opts.instances; ++t) {
      const int m = static_cast<int>(p.uniform(2, 4));
      RandomTable table(p.rng()());
      const auto f = table.as_function();
      std::vector<long> k = random_tuple(p, m, -4, 6);
      std::sort(k.begin(), k.end());
      for (std::size_t i = 1; i < k.size(); ++i) k[i] = std::max(k[i], k[i - 1] + 1);
      Rational direct = 0;
      std::vector<long> l(static_cast<std::size_t>(m - 1));
      std::function<void(int)> rec = [&](int pos) {
        if (pos == m - 1) {
          direct += f(l);
          return;
        }
        for (long v = k[static_cast<std::size_t>(pos)]; v <= k[static_cast<std::size_t>(pos) + 1]; ++v) {
          if (pos > 0 && v <= l[static_cast<std::size_t>(pos) - 1]) continue;
          l[static_cast<std::size_t>(pos)] = v;
          rec(pos + 1);
        }
      };
      rec(0);
      const Rational e = extended_sum(f, k);
      p.check(e == direct, [&] { return "k=" + join(k) + " extended=" + to_string(e) + " direct=" + to_string(direct); });
    }
    ctx.add(p);
  }
}

// --- operators ---------------------------------------------------------------

void suite_operators(const Ctx& ctx) {
  const int N = ctx.opts.instances;
  {
    auto p = ctx.make("operators.inversion_round_trip");
    for (int t = 0; t < N; ++t) {
      const int m = static_cast<int>(p.uniform(1, 3));
      const int d = static_cast<int>(p.uniform(0, 3));
      const auto a = random_op(p, m, static_cast<int>(p.uniform(1, 4)), true);
      const auto q = random_poly(p, m, d, static_cast<int>(p.uniform(1, 4)), true);
      const auto inv = op_invert(a, d);
      const bool ok = apply_op(a, apply_op(inv, q)) == q && apply_op(inv, apply_op(a, q)) == q;
      p.check(ok, [&] { return "A=" + to_string(a) + " d=" + std::to_string(d) + " p=" + to_string(q); });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("operators.degree_preservation");
    for (int t = 0; t < N; ++t) {
      const int m = static_cast<int>(p.uniform(1, 3));
      const auto a = random_op(p, m, static_cast<int>(p.uniform(1, 4)), true);
      const auto q = random_poly(p, m, 4, static_cast<int>(p.uniform(1, 5)), true);
      const auto r = apply_op(a, q);
      bool ok = true;
      for (int i = 1; i <= m; ++i) ok = ok && poly_degree_in(r, VarId::k(i)) == poly_degree_in(q, VarId::k(i));
      p.check(ok, [&] { return "A=" + to_string(a) + " p=" + to_string(q); });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("operators.composition_homomorphism");
    for (int t = 0; t < N; ++t) {
      const int m = static_cast<int>(p.uniform(1, 3));
      const auto a = random_op(p, m, 3, false);
      const auto b = random_op(p, m, 3, false);
      const auto q = random_poly(p, m, 3, 3, true);
      p.check(apply_op(a * b, q) == apply_op(a, apply_op(b, q)),
              [&] { return "A=" + to_string(a) + " B=" + to_string(b) + " p=" + to_string(q); });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("operators.t_identity_three_var");
    for (int t = 0; t < N; ++t) {
      RandomTable table(p.rng()());
      const auto f = table.as_function();
      const auto k = random_tuple(p, 4, -2, 5);
      const Rational l = t_identity_lhs(f, k);
      const Rational r = t_identity_rhs(f, k);
      p.check(l == r, [&] { return "k=" + join(k) + " lhs=" + to_string(l) + " rhs=" + to_string(r); });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("operators.t_identity_two_var");
    for (int t = 0; t < N; ++t) {
      RandomTable table(p.rng()());
      const auto h = table.as_function();
      const auto k = random_tuple(p, 3, -3, 6);
      const Rational l = t_identity_two_var_lhs(h, k);
      const Rational r = t_identity_two_var_rhs(h, k);
      p.check(l == r, [&] { return "k=" + join(k) + " lhs=" + to_string(l) + " rhs=" + to_string(r); });
    }
    ctx.add(p);
  }
  for (int m : {5, 6}) {
    auto p = ctx.make("operators.merge_rule_m" + std::to_string(m));
    for (int t = 0; t < N; ++t) {
      RandomTable table(p.rng()());
      const auto a = table.as_function();
      const auto k = random_tuple(p, m, -1, 5);
      const int i = static_cast<int>(p.uniform(2, m - 2));
      const Rational l = merge_lhs(a, k);
      const Rational r = merge_rhs(a, k, i);
      p.check(l == r, [&] {
        return "k=" + join(k) + " i=" + std::to_string(i) + " lhs=" + to_string(l) + " rhs=" + to_string(r);
      });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("operators.inverse_form_equals_gamma");
    for (int n = 1; n <= std::min(ctx.opts.max_rows, 5); ++n) {
      for (int extra = 0; extra <= 1; ++extra) {
        const int d = n - 1 + extra;
        bool ok = false;
        std::string why;
        try {
          ok = gamma_via_inverse_ops(n, d) == gamma_theorem1(n);
        } catch (const InternalError& e) {
          why = e.what();
        }
        p.check(ok, [&] { return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " " + why; });
      }
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("operators.normalizer_characterization");
    for (int n = 1; n <= std::min(ctx.opts.max_rows, 5); ++n) {
      const int m = hmt_arity(n);
      const auto normalized = apply_factors(operator_factors(OperatorKind::NORMALIZER, m), gamma_theorem1(n));
      p.check(normalized == gamma_base(n), [&] { return "n=" + std::to_string(n) + " got " + to_string(normalized); });
      const auto base = base_unnormalized(n);
      const auto fixed = apply_factors(operator_factors(OperatorKind::QUADRUPLE, m), base);
      p.check(fixed == base, [&] { return "n=" + std::to_string(n) + " quadruple product does not fix the base"; });
      p.check(normalized == base * leading_constant(n), [&] { return "n=" + std::to_string(n) + " constant differs"; });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("operators.symmetric_operator_preserves_antisymmetry");
    for (int t = 0; t < N; ++t) {
      const int m = static_cast<int>(p.uniform(2, 3));
      const auto a = symmetrize(random_op(p, m, 2, false));
      const auto q = vandermonde(m) * symmetrize(random_poly(p, m, 2, 2, true));
      const auto r = apply_op(a, q);
      p.check(antisymmetric(r), [&] { return "A=" + to_string(a) + " p=" + to_string(q); });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("operators.reflection_preserved");
    for (int t = 0; t < N; ++t) {
      const int m = static_cast<int>(p.uniform(1, 3));
      auto a = random_op(p, m, 3, false);
      a = a + invert_symbol(a, m);
      const long d = p.uniform(-3, 6);
      const int sigma = p.uniform(0, 1) ? 1 : -1;
      const MultiPoly form = MultiPoly::constant(m, d) - MultiPoly::variable(m, VarId::k(m));
      const auto q0 = random_poly(p, m, 3, 3, true);
      const auto q = q0 + poly_substitute_linear(q0, VarId::k(m), form) * Rational(sigma);
      const auto r = apply_op(a, q);
      p.check(r == poly_substitute_linear(r, VarId::k(m), form) * Rational(sigma), [&] {
        return "A=" + to_string(a) + " d=" + std::to_string(d) + " sigma=" + std::to_string(sigma) + " p=" + to_string(q);
      });
    }
    ctx.add(p);
  }
}

// --- symmetry ----------------------------------------------------------------

void suite_symmetry(const Ctx& ctx) {
  const int R = ctx.opts.max_rows;
  const int X = ctx.opts.max_x;
  const int N = ctx.opts.instances;
  const int Rsym = std::min(R, 6);
  auto rec_fn = [](HmtRecursion& rec, int n) {
    return IntFunction([&rec, n](std::span<const long> k) { return rec.value(n, k); });
  };
  {
    auto p = ctx.make("symmetry.degree_bound");
    for (int n = 1; n <= Rsym; ++n) {
      const auto g = gamma_theorem1(n);
      for (int i = 1; i <= hmt_arity(n); ++i) {
        const int d = poly_degree_in(g, VarId::k(i));
        p.check(d <= n - 1, [&] { return "n=" + std::to_string(n) + " deg k" + std::to_string(i) + " = " + std::to_string(d); });
      }
    }
    // n-th difference of the recursion in one coordinate vanishes.
    for (int t = 0; t < N; ++t) {
      const int n = static_cast<int>(p.uniform(2, Rsym));
      const long x = p.uniform(0, X);
      HmtRecursion rec(x);
      const int m = hmt_arity(n);
      const auto k = random_tuple(p, m, -2, x + 2);
      const int i = static_cast<int>(p.uniform(0, m - 1));
      Rational acc = 0;
      auto q = k;
      for (int s = 0; s <= n; ++s) {
        q[static_cast<std::size_t>(i)] = k[static_cast<std::size_t>(i)] + s;
        BigInt b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(s));
        acc += ((n - s) % 2 ? -1 : 1) * Rational(b) * rec.value(n, q);
      }
      p.check(acc == 0, [&] {
        return "n=" + std::to_string(n) + " x=" + std::to_string(x) + " k=" + join(k) + " coordinate " + std::to_string(i + 1);
      });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("symmetry.v_antisymmetry");
    for (int n = 3; n <= Rsym; ++n) {
      const int m = hmt_arity(n);
      const auto g = gamma_theorem1(n);
      for (int i = 1; i < m; ++i) {
        const auto vg = apply_op(v_operator(m, i, i + 1), g);
        p.check((vg + swap_vars(vg, i, i + 1)).is_zero(),
                [&] { return "n=" + std::to_string(n) + " i=" + std::to_string(i); });
      }
    }
    for (int t = 0; t < N; ++t) {
      const int n = static_cast<int>(p.uniform(3, std::max(3, Rsym)));
      const int m = hmt_arity(n);
      const long x = p.uniform(0, X);
      HmtRecursion rec(x);
      const auto f = rec_fn(rec, n);
      const auto k = random_tuple(p, m, -2, x + 2);
      const int i = static_cast<int>(p.uniform(0, m - 2));
      auto ks = k;
      std::swap(ks[static_cast<std::size_t>(i)], ks[static_cast<std::size_t>(i) + 1]);
      const Rational s = v_at(f, k, i, i + 1) + v_at(f, ks, i, i + 1);
      p.check(s == 0, [&] {
        return "n=" + std::to_string(n) + " x=" + std::to_string(x) + " k=" + join(k) + " i=" + std::to_string(i + 1);
      });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("symmetry.gamma_star_antisymmetry");
    const int top = std::min(R, 5);
    for (int n = 1; n <= top; ++n) {
      const auto g = gamma_star(n);
      const int m = hmt_arity(n);
      for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
          p.check(swap_vars(g, i, j) == -g, [&] {
            return "n=" + std::to_string(n) + " swap k" + std::to_string(i) + ",k" + std::to_string(j);
          });
        }
      }
    }
    for (int t = 0; t < N; ++t) {
      const int n = static_cast<int>(p.uniform(3, std::max(3, top)));
      const int m = hmt_arity(n);
      const long x = p.uniform(0, X);
      HmtRecursion rec(x);
      const auto f = rec_fn(rec, n);
      const auto& op = build_operator(OperatorKind::V_PRODUCT, m);
      const auto k = random_tuple(p, m, -2, x + 2);
      const int i = static_cast<int>(p.uniform(0, m - 1));
      int j = static_cast<int>(p.uniform(0, m - 2));
      if (j >= i) ++j;
      auto ks = k;
      std::swap(ks[static_cast<std::size_t>(i)], ks[static_cast<std::size_t>(j)]);
      const Rational a = apply_op_at(op, f, k);
      const Rational b = apply_op_at(op, f, ks);
      p.check(a == -b, [&] { return "n=" + std::to_string(n) + " x=" + std::to_string(x) + " k=" + join(k); });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("symmetry.reflection");
    for (int n = 1; n <= Rsym; ++n) {
      const auto g = gamma_theorem1(n);
      const int m = hmt_arity(n);
      const bool even = n % 2 == 0;
      const auto r = reflect(g, m, even ? 2 : 1);
      p.check(even ? r == -g : r == g, [&] { return "n=" + std::to_string(n) + " polynomial identity"; });
    }
    for (int t = 0; t < N; ++t) {
      const int n = static_cast<int>(p.uniform(1, Rsym));
      const int m = hmt_arity(n);
      const long x = p.uniform(0, X);
      const bool even = n % 2 == 0;
      HmtRecursion rec(x);
      const auto k = random_tuple(p, m, -2, x + 3);
      auto kr = k;
      kr.back() = 2 * x + (even ? 2 : 1) - k.back();
      const Rational a = rec.value(n, k);
      const Rational b = rec.value(n, kr);
      p.check(even ? a == -b : a == b,
              [&] { return "n=" + std::to_string(n) + " x=" + std::to_string(x) + " k=" + join(k); });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("symmetry.reflected_sum_part1");
    for (int t = 0; t < N; ++t) {
      RandomTable table(p.rng()());
      const long x = p.uniform(-2, 6);
      auto f = [&](long l) -> Rational {
        const long a[1] = {l};
        const long b[1] = {2 * x + 2 - l};
        return table(a) - table(b);
      };
      const long k1 = p.uniform(-3, 2 * x + 4);
      const long k2 = p.uniform(-3, 2 * x + 4);
      const Rational g1 = range_sum(k1, k2, f);
      const Rational g2 = range_sum(k1, 2 * x + 1 - k2, f);
      p.check(g1 == g2, [&] {
        return "x=" + std::to_string(x) + " k1=" + std::to_string(k1) + " k2=" + std::to_string(k2);
      });
    }
    ctx.add(p);
  }
  {
    // f = N^{-1} P with P antisymmetric and invariant under each
    // k_i -> 2x+1-k_i; then V f is antisymmetric and f is invariant under
    // l_2 -> 2x+1-l_2.
    auto p = ctx.make("symmetry.reflected_sum_part2");
    const int m = 2;
    const int d = 5;
    const auto inv = op_invert(build_operator(OperatorKind::NORMALIZER, m), d);
    const MultiPoly X1 = MultiPoly::variable(m, VarId::x());
    const MultiPoly k1 = MultiPoly::variable(m, VarId::k(1));
    const MultiPoly k2 = MultiPoly::variable(m, VarId::k(2));
    const MultiPoly u1 = (k1 * Rational(2) - X1 * Rational(2) - Rational(1));
    const MultiPoly u2 = (k2 * Rational(2) - X1 * Rational(2) - Rational(1));
    const MultiPoly s1 = u1 * u1 + u2 * u2;
    const MultiPoly s2 = u1 * u1 * u2 * u2;
    const MultiPoly core = (k2 - k1) * (X1 * Rational(2) + Rational(1) - k1 - k2);
    const int shapes = 10;
    const int per_shape = std::max(10, N / shapes + 1);
    for (int s = 0; s < shapes; ++s) {
      const MultiPoly sym = MultiPoly::constant(m, p.uniform(-4, 4)) + s1 * Rational(p.uniform(-3, 3)) +
                            s2 * Rational(p.uniform(-2, 2));
      const MultiPoly fp = apply_op(inv, core * sym);
      for (int t = 0; t < per_shape; ++t) {
        const long x = p.uniform(0, 5);
        IntFunction f = [&](std::span<const long> l) { return poly_eval(fp, x, l); };
        const long a = p.uniform(-2, x + 3);
        const long b = p.uniform(-2, x + 3);
        const long g1k[3] = {a, b, x};
        const long g2k[3] = {a, 2 * x + 2 - b, x};
        const Rational g1 = extended_sum(f, g1k);
        const Rational g2 = extended_sum(f, g2k);
        p.check(g1 == -g2, [&] {
          return "f=" + to_string(fp) + " x=" + std::to_string(x) + " k=(" + std::to_string(a) + "," + std::to_string(b) + ")";
        });
      }
    }
    ctx.add(p);
  }
}

// --- genfun ------------------------------------------------------------------

void suite_genfun(const Ctx& ctx) {
  const int N = ctx.opts.instances;
  {
    auto p = ctx.make("genfun.fixtures");
    const long a[3] = {3, 2, 1};
    const long b[3] = {-1, 2, 3};
    const BigInt ca = mt_gf_coeff(3, a);
    const BigInt cb = mt_gf_coeff(3, b);
    const BigInt al = alpha_value(3, b);
    p.check(ca == -1, [&] { return "coefficient at (3,2,1) = " + to_string(ca); });
    p.check(cb == 7, [&] { return "coefficient at (-1,2,3) = " + to_string(cb); });
    p.check(al == 23, [&] { return "alpha(3;-1,2,3) = " + to_string(al); });
    p.check(cb != al, [&] { return "coefficient and alpha agree at (-1,2,3)"; });
    ctx.add(p);
  }
  {
    auto p = ctx.make("genfun.mt_coeff_equals_alpha_nonnegative");
    for (int n = 1; n <= 3; ++n) {
      std::vector<long> k(static_cast<std::size_t>(n), 0);
      while (true) {
        const BigInt c = mt_gf_coeff(n, k);
        const BigInt a = alpha_value(n, k);
        p.check(c == a, [&] { return "n=" + std::to_string(n) + " k=" + join(k) + " coefficient=" + to_string(c) + " alpha=" + to_string(a); });
        std::size_t i = 0;
        for (; i < k.size(); ++i) {
          if (++k[i] <= 5) break;
          k[i] = 0;
        }
        if (i == k.size()) break;
      }
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("genfun.asm_constant_term");
    const int top = ctx.opts.unsafe_sizes ? 6 : 5;
    for (int n = 1; n <= top; ++n) {
      const BigInt c = asm_constant_term(n);
      const BigInt a = asm_count(n);
      p.check(c == a, [&] { return "n=" + std::to_string(n) + " constant term " + to_string(c) + " vs " + to_string(a); });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("genfun.hmt_coeff_equals_gamma_in_region");
    for (int t = 0; t < N; ++t) {
      const int n = static_cast<int>(p.uniform(1, std::min(ctx.opts.max_rows, 5)));
      const long x = p.uniform(0, ctx.opts.max_x);
      const long c = hmt_gf_cutoff(n, x);
      const auto k = random_tuple(p, hmt_arity(n), c - 6, c);
      const auto h = hmt_gf_coeff(n, x, k);
      const BigInt g = gamma_value(n, x, k);
      p.check(h.in_region && h.value == g, [&] {
        return "n=" + std::to_string(n) + " x=" + std::to_string(x) + " k=" + join(k) + " coefficient=" + to_string(h.value) +
               " gamma=" + to_string(g);
      });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("genfun.binomial_determinant");
    for (int kind = 1; kind <= 2; ++kind) {
      for (int n = 1; n <= 4; ++n) {
        p.check(binom_determinant_symbolic(kind, n) == binom_determinant_product_symbolic(kind, n),
                [&] { return "symbolic kind " + std::to_string(kind) + " n=" + std::to_string(n); });
      }
    }
    for (int t = 0; t < N; ++t) {
      const int kind = static_cast<int>(p.uniform(1, 2));
      const int n = static_cast<int>(p.uniform(1, 6));
      std::vector<Rational> k;
      for (int i = 0; i < n; ++i) k.push_back(make_rational(p.uniform(-20, 20), p.uniform(1, 6)));
      const Rational d = binom_determinant(kind, k);
      const Rational q = binom_determinant_product(kind, k);
      p.check(d == q, [&] {
        std::string s = "kind " + std::to_string(kind) + " k=";
        for (const auto& v : k) s += to_string(v) + " ";
        return s;
      });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("genfun.vandermonde_monic");
    for (int t = 0; t < N; ++t) {
      const int n = static_cast<int>(p.uniform(1, 5));
      // p_j(Y) = Y^{j-1} + lower terms; rows evaluate at Y_i.
      std::vector<std::vector<Rational>> coeffs(static_cast<std::size_t>(n));
      for (int j = 0; j < n; ++j) {
        for (int e = 0; e < j; ++e) coeffs[static_cast<std::size_t>(j)].push_back(Rational(p.uniform(-5, 5)));
        coeffs[static_cast<std::size_t>(j)].push_back(1);
      }
      std::vector<Rational> y;
      for (int i = 0; i < n; ++i) y.push_back(make_rational(p.uniform(-9, 9), p.uniform(1, 3)));
      std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          Rational v = 0;
          const auto& c = coeffs[static_cast<std::size_t>(j)];
          for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * y[static_cast<std::size_t>(i)] + *it;
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        }
      }
      Rational prod = 1;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) prod *= y[static_cast<std::size_t>(j)] - y[static_cast<std::size_t>(i)];
      }
      const Rational det = det_rational(a);
      p.check(det == prod, [&] { return "n=" + std::to_string(n) + " det=" + to_string(det) + " product=" + to_string(prod); });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("genfun.series_identities");
    for (int j = 1; j <= 6; ++j) {
      for (long c : {-4L, 0L, 3L, 9L}) {
        for (long z = -j - 1; z <= j - 3; ++z) {
          p.check(series_identity_check(Parity::Odd, j, z, c, 24), [&] {
            return "odd j=" + std::to_string(j) + " z=" + std::to_string(z) + " c=" + std::to_string(c);
          });
        }
        for (long z = -j - 1; z <= j - 2; ++z) {
          p.check(series_identity_check(Parity::Even, j, z, c, 24), [&] {
            return "even j=" + std::to_string(j) + " z=" + std::to_string(z) + " c=" + std::to_string(c);
          });
        }
      }
    }
    ctx.add(p);
  }
}

// --- asm ---------------------------------------------------------------------

void suite_asm(const Ctx& ctx) {
  const int guard = ctx.opts.unsafe_sizes ? 7 : kAsmSizeGuard;
  {
    auto p = ctx.make("asm.bijection");
    for (int n = 1; n <= 5; ++n) {
      std::set<std::vector<std::vector<long>>> seen;
      std::vector<long> bottom(static_cast<std::size_t>(n));
      std::iota(bottom.begin(), bottom.end(), 1L);
      const auto e = enumerate_asm(n, [&](const AsmMatrix& a) {
        const auto t = asm_to_mt(a);
        const bool ok = t.is_valid() && t.bottom() == bottom && mt_to_asm(t) == a;
        seen.insert(t.rows);
        p.check(ok, [&] { return "n=" + std::to_string(n) + "\n" + to_text(a); });
      }, guard);
      const BigInt mt = count_mt_brute(bottom);
      p.check(e.count == mt && BigInt(static_cast<long>(seen.size())) == mt, [&] {
        return "n=" + std::to_string(n) + " asms=" + to_string(e.count) + " triangles=" + to_string(mt);
      });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("asm.vsasm_correspondence");
    const int top = ctx.opts.unsafe_sizes ? 3 : 2;
    for (int n = 1; n <= 3; ++n) {
      if (2 * n + 1 > guard && n > top) break;
      std::set<std::vector<std::vector<long>>> images;
      BigInt count = 0;
      std::vector<long> bottom(static_cast<std::size_t>(n));
      std::iota(bottom.begin(), bottom.end(), 1L);
      enumerate_asm(2 * n + 1, [&](const AsmMatrix& a) {
        if (!is_vertically_symmetric(a)) return;
        ++count;
        const auto h = vsasm_to_hmt(a);
        bool ok = h.is_valid() && h.size() == 2 * n && h.rows.back() == bottom;
        for (const auto& row : h.rows) {
          for (long v : row) ok = ok && v <= n;
        }
        images.insert(h.rows);
        p.check(ok, [&] { return "n=" + std::to_string(n) + "\n" + to_text(a); });
      }, 2 * n + 1);
      const BigInt hmt = count_hmt_brute(2 * n, n, bottom);
      const BigInt formula = vsasm_count(n);
      p.check(count == hmt && count == formula && BigInt(static_cast<long>(images.size())) == count, [&] {
        return "n=" + std::to_string(n) + " vsasm=" + to_string(count) + " hmt=" + to_string(hmt) + " formula=" + to_string(formula);
      });
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("asm.alpha_equals_mt_brute");
    for (int n = 1; n <= 4; ++n) {
      for (long lo : {-2L, 0L, 3L}) {
        for_each_strict(n, lo, lo + n + 1, [&](const std::vector<long>& k) {
          const BigInt a = alpha_value(n, k);
          const BigInt b = count_mt_brute(k);
          p.check(a == b, [&] { return "k=" + join(k) + " alpha=" + to_string(a) + " brute=" + to_string(b); });
        });
      }
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("asm.alpha_product_formula");
    for (int n = 1; n <= 6; ++n) {
      std::vector<long> k(static_cast<std::size_t>(n));
      std::iota(k.begin(), k.end(), 1L);
      const BigInt a = alpha_value(n, k);
      const BigInt f = asm_count(n);
      p.check(a == f, [&] { return "n=" + std::to_string(n) + " alpha=" + to_string(a) + " formula=" + to_string(f); });
      if (n <= guard) {
        const BigInt e = enumerate_asm(n, {}, guard).count;
        p.check(e == f, [&] { return "n=" + std::to_string(n) + " enumeration=" + to_string(e); });
      }
    }
    ctx.add(p);
  }
  {
    auto p = ctx.make("asm.alpha_translation_invariance");
    for (int t = 0; t < ctx.opts.instances; ++t) {
      const int n = static_cast<int>(p.uniform(1, 4));
      const auto k = random_tuple(p, n, -5, 5);
      const long c = p.uniform(-7, 7);
      auto kc = k;
      for (auto& v : kc) v += c;
      p.check(alpha_value(n, k) == alpha_value(n, kc), [&] { return "k=" + join(k) + " c=" + std::to_string(c); });
    }
    ctx.add(p);
  }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
  const auto& names = verify_suites();
  if (std::find(names.begin(), names.end(), opts.suite) == names.end()) {
    throw InvalidInput("unknown suite '" + opts.suite + "'");
  }
  if (opts.max_rows < 1 || opts.max_x < 1) throw InvalidInput("verify bounds must be positive");
  if (opts.instances < 1) throw InvalidInput("instance count must be positive");
  if (!opts.unsafe_sizes && (opts.max_rows > 9 || opts.max_x > 9)) {
    throw InvalidInput("verify bounds above 9 need --unsafe-sizes");
  }
  VerifyReport report;
  const Ctx ctx{opts, report.properties};
  const bool all = opts.suite == "all";
  if (all || opts.suite == "asm") suite_asm(ctx);
  if (all || opts.suite == "genfun") suite_genfun(ctx);
  if (all || opts.suite == "operators") suite_operators(ctx);
  if (all || opts.suite == "recursion") suite_recursion(ctx);
  if (all || opts.suite == "symmetry") suite_symmetry(ctx);
  std::sort(report.properties.begin(), report.properties.end(),
            [](const PropertyResult& a, const PropertyResult& b) { return a.name < b.name; });
  return report;
}

}  // namespace monotri
