#include "monotri/shift_op.hpp"

#include <algorithm>
#include <numeric>

#include "monotri/errors.hpp"

namespace monotri {

ShiftOpExpr::ShiftOpExpr(int arity) : arity_(arity) {
  if (arity < 0) throw InvalidInput("negative operator arity");
}

ShiftOpExpr ShiftOpExpr::identity(int arity) { return constant(arity, 1); }

ShiftOpExpr ShiftOpExpr::constant(int arity, const Rational& c) {
  ShiftOpExpr a(arity);
  a.add_term(Key(static_cast<std::size_t>(arity), 0), c);
  return a;
}

ShiftOpExpr ShiftOpExpr::shift(int arity, int i, int power) {
  if (i < 1 || i > arity) throw InvalidInput("shift symbol index out of range");
  Key k(static_cast<std::size_t>(arity), 0);
  k[static_cast<std::size_t>(i - 1)] = power;
  ShiftOpExpr a(arity);
  a.add_term(k, 1);
  return a;
}

ShiftOpExpr ShiftOpExpr::delta(int arity, int i) { return shift(arity, i) - identity(arity); }

ShiftOpExpr ShiftOpExpr::term(int arity, Key exps, const Rational& c) {
  if (exps.size() != static_cast<std::size_t>(arity)) throw InvalidInput("operator key length mismatch");
  ShiftOpExpr a(arity);
  a.add_term(exps, c);
  return a;
}

Rational ShiftOpExpr::coefficient(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ShiftOpExpr::add_term(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ShiftOpExpr& ShiftOpExpr::operator+=(const ShiftOpExpr& o) {
  if (o.arity_ != arity_) throw InvalidInput("op_add: arity mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

ShiftOpExpr& ShiftOpExpr::operator-=(const ShiftOpExpr& o) {
  if (o.arity_ != arity_) throw InvalidInput("op_sub: arity mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

ShiftOpExpr& ShiftOpExpr::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

ShiftOpExpr operator*(const ShiftOpExpr& a, const ShiftOpExpr& b) {
  if (a.arity_ != b.arity_) throw InvalidInput("op_mul: arity mismatch");
  ShiftOpExpr out(a.arity_);
  ShiftOpExpr::Key k(static_cast<std::size_t>(a.arity_));
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      out.add_term(k, ca * cb);
    }
  }
  return out;
}

ShiftOpExpr ShiftOpExpr::operator-() const {
  ShiftOpExpr out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

ShiftOpExpr op_add(const ShiftOpExpr& a, const ShiftOpExpr& b) { return a + b; }
ShiftOpExpr op_mul(const ShiftOpExpr& a, const ShiftOpExpr& b) { return a * b; }

std::string to_string(const ShiftOpExpr& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  // Descending order so that the identity term comes last, like constants.
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    const auto& [k, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (k[i] == 0) continue;
      std::string f = "E" + std::to_string(i + 1);
      if (k[i] != 1) f += "^" + std::to_string(k[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + " * ";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out += " * ";
      out += factors[i];
    }
  }
  return out;
}

MultiPoly apply_op(const ShiftOpExpr& a, const MultiPoly& p) {
  if (a.arity() != p.arity()) {
    throw InvalidInput("apply_op: operator arity " + std::to_string(a.arity()) + " vs polynomial arity " +
                       std::to_string(p.arity()));
  }
  const auto m = static_cast<std::size_t>(a.arity());
  MultiPoly out(p.arity());
  if (p.is_zero()) return out;
  // Terms arrive in lexicographic key order, so consecutive keys share
  // prefixes; stack[j] holds p shifted by the first j exponents of the
  // current key.
  std::vector<MultiPoly> stack(m + 1, MultiPoly(p.arity()));
  stack[0] = p;
  const ShiftOpExpr::Key* prev = nullptr;
  for (const auto& [k, c] : a.terms()) {
    std::size_t common = 0;
    if (prev != nullptr) {
      while (common < m && (*prev)[common] == k[common]) ++common;
    }
    for (std::size_t j = common; j < m; ++j) {
      stack[j + 1] = k[j] == 0 ? stack[j] : poly_shift(stack[j], VarId::k(static_cast<int>(j) + 1), k[j]);
    }
    out += stack[m] * c;
    prev = &k;
  }
  return out;
}

Rational apply_op_at(const ShiftOpExpr& a, const IntFunction& f, std::span<const long> point) {
  if (point.size() != static_cast<std::size_t>(a.arity())) throw InvalidInput("apply_op_at: arity mismatch");
  std::vector<long> q(point.begin(), point.end());
  Rational total = 0;
  for (const auto& [k, c] : a.terms()) {
    for (std::size_t i = 0; i < q.size(); ++i) q[i] = point[i] + k[i];
    total += c * f(q);
  }
  return total;
}

MultiPoly swap_vars(const MultiPoly& p, int i, int j) {
  if (i < 1 || j < 1 || i > p.arity() || j > p.arity() || i == j) {
    throw InvalidInput("swap_vars: need distinct indices in 1.." + std::to_string(p.arity()));
  }
  MultiPoly out(p.arity());
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    std::swap(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]);
    out.add_term(f, c);
  }
  return out;
}

ShiftOpExpr permute_symbols(const ShiftOpExpr& a, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(a.arity())) throw InvalidInput("permute_symbols: size mismatch");
  ShiftOpExpr out(a.arity());
  ShiftOpExpr::Key nk(perm.size());
  for (const auto& [k, c] : a.terms()) {
    for (std::size_t i = 0; i < perm.size(); ++i) nk[static_cast<std::size_t>(perm[i] - 1)] = k[i];
    out.add_term(nk, c);
  }
  return out;
}

ShiftOpExpr invert_symbol(const ShiftOpExpr& a, int i) {
  if (i < 1 || i > a.arity()) throw InvalidInput("invert_symbol: index out of range");
  ShiftOpExpr out(a.arity());
  for (const auto& [k, c] : a.terms()) {
    auto nk = k;
    nk[static_cast<std::size_t>(i - 1)] = -nk[static_cast<std::size_t>(i - 1)];
    out.add_term(nk, c);
  }
  return out;
}

bool is_symmetric(const ShiftOpExpr& a) {
  // Adjacent transpositions generate the symmetric group.
  std::vector<int> perm(static_cast<std::size_t>(a.arity()));
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = 0; i + 1 < a.arity(); ++i) {
    auto p = perm;
    std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]);
    if (!(permute_symbols(a, p) == a)) return false;
  }
  return true;
}

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::THEOREM1: return "THEOREM1";
    case OperatorKind::INVERSE_FORM: return "INVERSE_FORM";
    case OperatorKind::BETA_TO_GAMMA: return "BETA_TO_GAMMA";
    case OperatorKind::GAMMA_BAR_TO_GAMMA: return "GAMMA_BAR_TO_GAMMA";
    case OperatorKind::V_PRODUCT: return "V_PRODUCT";
    case OperatorKind::ALPHA: return "ALPHA";
    case OperatorKind::NORMALIZER: return "NORMALIZER";
    case OperatorKind::QUADRUPLE: return "QUADRUPLE";
  }
  return "UNKNOWN";
}

std::optional<OperatorKind> parse_operator_kind(const std::string& name) {
  for (auto k : {OperatorKind::THEOREM1, OperatorKind::INVERSE_FORM, OperatorKind::BETA_TO_GAMMA,
                 OperatorKind::GAMMA_BAR_TO_GAMMA, OperatorKind::V_PRODUCT, OperatorKind::ALPHA,
                 OperatorKind::NORMALIZER, OperatorKind::QUADRUPLE}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

ShiftOpExpr v_operator(int arity, int i, int j) {
  return ShiftOpExpr::identity(arity) + ShiftOpExpr::shift(arity, j) * ShiftOpExpr::delta(arity, i);
}

// ---------------------------------------------------------------------------
// Delta-basis power series, dense on the box [0, d]^m.

namespace {

class DeltaBox {
 public:
  DeltaBox(int m, int d) : m_(m), d_(d) {
    std::size_t n = 1;
    for (int i = 0; i < m; ++i) n *= static_cast<std::size_t>(d + 1);
    data_.assign(n, Rational(0));
  }

  int arity() const { return m_; }
  int bound() const { return d_; }
  std::size_t size() const { return data_.size(); }
  Rational& operator[](std::size_t idx) { return data_[idx]; }
  const Rational& operator[](std::size_t idx) const { return data_[idx]; }

  std::vector<int> unflatten(std::size_t idx) const {
    std::vector<int> j(static_cast<std::size_t>(m_));
    for (int i = m_ - 1; i >= 0; --i) {
      j[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(d_ + 1));
      idx /= static_cast<std::size_t>(d_ + 1);
    }
    return j;
  }

  std::size_t flatten(std::span<const int> j) const {
    std::size_t idx = 0;
    for (int v : j) idx = idx * static_cast<std::size_t>(d_ + 1) + static_cast<std::size_t>(v);
    return idx;
  }

  // Stride of dimension i in the flat layout.
  std::size_t stride(int i) const {
    std::size_t s = 1;
    for (int t = i + 1; t < m_; ++t) s *= static_cast<std::size_t>(d_ + 1);
    return s;
  }

 private:
  int m_;
  int d_;
  std::vector<Rational> data_;
};

// E^e = (id + Delta)^e = sum_j C(e, j) Delta^j, truncated at j = d.
DeltaBox to_delta(const ShiftOpExpr& a, int d) {
  const int m = a.arity();
  DeltaBox box(m, d);
  std::vector<std::vector<Rational>> series(static_cast<std::size_t>(m));
  std::vector<int> j(static_cast<std::size_t>(m));
  for (const auto& [k, c] : a.terms()) {
    for (int i = 0; i < m; ++i) {
      auto& s = series[static_cast<std::size_t>(i)];
      const int e = k[static_cast<std::size_t>(i)];
      s.assign(static_cast<std::size_t>(e == 0 ? 1 : d + 1), Rational(0));
      for (std::size_t t = 0; t < s.size(); ++t) s[t] = generalized_binomial(Rational(e), static_cast<long>(t));
    }
    // Odometer over the (sparse) support of the outer product.
    std::fill(j.begin(), j.end(), 0);
    while (true) {
      Rational v = c;
      for (int i = 0; i < m && v != 0; ++i) v *= series[static_cast<std::size_t>(i)][static_cast<std::size_t>(j[static_cast<std::size_t>(i)])];
      if (v != 0) box[box.flatten(j)] += v;
      int i = m - 1;
      for (; i >= 0; --i) {
        auto& ji = j[static_cast<std::size_t>(i)];
        if (++ji < static_cast<int>(series[static_cast<std::size_t>(i)].size())) break;
        ji = 0;
      }
      if (i < 0) break;
    }
  }
  return box;
}

// Delta^j = (E - id)^j = sum_t C(j, t) (-1)^(j-t) E^t, one dimension at a time.
ShiftOpExpr from_delta(DeltaBox box) {
  const int m = box.arity();
  const int d = box.bound();
  std::vector<std::vector<BigInt>> pascal(static_cast<std::size_t>(d + 1));
  for (int jj = 0; jj <= d; ++jj) {
    auto& row = pascal[static_cast<std::size_t>(jj)];
    row.resize(static_cast<std::size_t>(jj + 1));
    for (int t = 0; t <= jj; ++t) {
      BigInt b;
      mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(jj), static_cast<unsigned long>(t));
      row[static_cast<std::size_t>(t)] = ((jj - t) % 2 == 0) ? b : BigInt(-b);
    }
  }
  for (int dim = 0; dim < m; ++dim) {
    DeltaBox next(m, d);
    const std::size_t stride = box.stride(dim);
    for (std::size_t idx = 0; idx < box.size(); ++idx) {
      if (box[idx] == 0) continue;
      const int jj = static_cast<int>((idx / stride) % static_cast<std::size_t>(d + 1));
      const std::size_t base = idx - static_cast<std::size_t>(jj) * stride;
      for (int t = 0; t <= jj; ++t) {
        next[base + static_cast<std::size_t>(t) * stride] +=
            box[idx] * Rational(pascal[static_cast<std::size_t>(jj)][static_cast<std::size_t>(t)]);
      }
    }
    box = std::move(next);
  }
  ShiftOpExpr out(m);
  for (std::size_t idx = 0; idx < box.size(); ++idx) {
    if (box[idx] != 0) out.add_term(box.unflatten(idx), box[idx]);
  }
  return out;
}

}  // namespace

ShiftOpExpr op_truncate(const ShiftOpExpr& a, int degree_bound) {
  if (degree_bound < 0) throw InvalidInput("degree bound must be nonnegative");
  return from_delta(to_delta(a, degree_bound));
}

ShiftOpExpr op_invert(const ShiftOpExpr& a, int degree_bound) {
  if (degree_bound < 0) throw InvalidInput("degree bound must be nonnegative");
  const DeltaBox series = to_delta(a, degree_bound);
  const Rational a0 = series[0];
  if (a0 == 0) {
    throw NotInvertible("operator has zero constant term in the Delta basis: " + to_string(a));
  }
  const int m = a.arity();
  struct Entry {
    std::vector<int> j;
    Rational c;
  };
  std::vector<Entry> nonzero;
  for (std::size_t idx = 1; idx < series.size(); ++idx) {
    if (series[idx] != 0) nonzero.push_back({series.unflatten(idx), series[idx]});
  }

  // Coefficients of the inverse are determined in order of total degree;
  // b_r = -(1/a_0) sum_{0 != i <= r} a_i b_{r-i}.
  std::vector<std::size_t> order(series.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<int> degree(series.size());
  for (std::size_t idx = 0; idx < series.size(); ++idx) {
    auto j = series.unflatten(idx);
    degree[idx] = std::accumulate(j.begin(), j.end(), 0);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return degree[x] < degree[y]; });

  DeltaBox inv(m, degree_bound);
  const Rational inv_a0 = Rational(1) / a0;
  std::vector<int> diff(static_cast<std::size_t>(m));
  for (std::size_t idx : order) {
    if (idx == 0) {
      inv[0] = inv_a0;
      continue;
    }
    const auto r = series.unflatten(idx);
    Rational acc = 0;
    for (const auto& [j, c] : nonzero) {
      bool fits = true;
      for (std::size_t i = 0; i < r.size(); ++i) {
        diff[i] = r[i] - j[i];
        if (diff[i] < 0) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      const auto& b = inv[inv.flatten(diff)];
      if (b != 0) acc += c * b;
    }
    inv[idx] = -acc * inv_a0;
  }
  return from_delta(std::move(inv));
}

std::vector<ShiftOpExpr> operator_factors(OperatorKind kind, int m, std::optional<int> degree_bound) {
  if (m < 1) throw InvalidInput("build_operator: m must be positive");
  if (kind == OperatorKind::INVERSE_FORM && !degree_bound) {
    throw InvalidInput("build_operator: INVERSE_FORM needs a degree bound");
  }
  const auto id = ShiftOpExpr::identity(m);
  auto E = [m](int i, int power = 1) { return ShiftOpExpr::shift(m, i, power); };
  auto D = [m](int i) { return ShiftOpExpr::delta(m, i); };

  std::vector<ShiftOpExpr> out;
  for (int p = 1; p <= m; ++p) {
    for (int q = p + 1; q <= m; ++q) {
      switch (kind) {
        case OperatorKind::THEOREM1:
          out.push_back(E(p) * (E(p, -1) + E(q, -1) - id) * (E(p, -1) + E(q) - id));
          break;
        case OperatorKind::INVERSE_FORM: {
          const int d = *degree_bound;
          const auto first = op_invert(id + E(q) * D(p), d);
          const auto second = op_invert(id + E(q, -1) * D(p), d);
          out.push_back(op_truncate(first * E(p) * second, d));
          break;
        }
        case OperatorKind::BETA_TO_GAMMA:
          out.push_back((E(p) + E(q) - E(p) * E(q)) * (E(p) + E(q, -1) - E(p) * E(q, -1)));
          break;
        case OperatorKind::GAMMA_BAR_TO_GAMMA:
          out.push_back((E(p, -1) + E(q, -1) - id) * (E(p, -1) * E(q, -1) + id - E(q, -1)));
          break;
        case OperatorKind::V_PRODUCT:
          out.push_back(v_operator(m, p, q));
          break;
        case OperatorKind::ALPHA:
          out.push_back(id + E(p) * E(q) - E(p));
          break;
        case OperatorKind::NORMALIZER:
          out.push_back((id + E(q) * D(p)) * E(p, -1) * (id + E(q, -1) * D(p)));
          break;
        case OperatorKind::QUADRUPLE:
          out.push_back((id + E(q) * D(p)) * (id + E(q, -1) * D(p)) * (id - E(q) * E(p, -1) * D(p)) *
                        (id - E(q, -1) * E(p, -1) * D(p)));
          break;
      }
    }
  }
  return out;
}

ShiftOpExpr build_operator(OperatorKind kind, int m, std::optional<int> degree_bound) {
  ShiftOpExpr out = ShiftOpExpr::identity(m);
  for (const auto& f : operator_factors(kind, m, degree_bound)) {
    out = out * f;
    // Keeps the expanded inverse form from growing past the box [0, d]^m.
    if (kind == OperatorKind::INVERSE_FORM) out = op_truncate(out, *degree_bound);
  }
  return out;
}

MultiPoly apply_factors(std::span<const ShiftOpExpr> factors, const MultiPoly& p) {
  MultiPoly out = p;
  for (const auto& f : factors) out = apply_op(f, out);
  return out;
}

}  // namespace monotri
