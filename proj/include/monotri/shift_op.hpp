#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monotri/function_table.hpp"
#include "monotri/multipoly.hpp"
#include "monotri/rational.hpp"

namespace monotri {

// A Laurent polynomial in m commuting symbols. As an operator, the symbol i
// stands for the shift E_{k_i}; the same type doubles as a plain Laurent
// polynomial in X_1..X_m for the generating-function code.
class ShiftOpExpr {
 public:
  using Key = std::vector<int>;  // exponent of E_{k_1} .. E_{k_m}
  using TermMap = std::map<Key, Rational>;

  explicit ShiftOpExpr(int arity = 0);

  static ShiftOpExpr identity(int arity);
  static ShiftOpExpr constant(int arity, const Rational& c);
  // E_{k_i}^power, 1-based i.
  static ShiftOpExpr shift(int arity, int i, int power = 1);
  // Delta_{k_i} = E_{k_i} - id.
  static ShiftOpExpr delta(int arity, int i);
  static ShiftOpExpr term(int arity, Key exps, const Rational& c);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Key& k) const;
  void add_term(const Key& k, const Rational& c);

  ShiftOpExpr& operator+=(const ShiftOpExpr& o);
  ShiftOpExpr& operator-=(const ShiftOpExpr& o);
  ShiftOpExpr& operator*=(const Rational& c);
  friend ShiftOpExpr operator+(ShiftOpExpr a, const ShiftOpExpr& b) { return a += b; }
  friend ShiftOpExpr operator-(ShiftOpExpr a, const ShiftOpExpr& b) { return a -= b; }
  friend ShiftOpExpr operator*(const ShiftOpExpr& a, const ShiftOpExpr& b);
  friend ShiftOpExpr operator*(ShiftOpExpr a, const Rational& c) { return a *= c; }
  ShiftOpExpr operator-() const;

  friend bool operator==(const ShiftOpExpr& a, const ShiftOpExpr& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  int arity_;
  TermMap terms_;
};

using LaurentPoly = ShiftOpExpr;

ShiftOpExpr op_add(const ShiftOpExpr& a, const ShiftOpExpr& b);
ShiftOpExpr op_mul(const ShiftOpExpr& a, const ShiftOpExpr& b);

// Same text format as polynomials, with symbols E1, E1^-1, ...
std::string to_string(const ShiftOpExpr& a);

// Applies the operator to a polynomial; x is never shifted.
MultiPoly apply_op(const ShiftOpExpr& a, const MultiPoly& p);

// Applies the operator to an arbitrary function on Z^m at one point:
// sum_c c * f(point + exponent). Used for function tables.
Rational apply_op_at(const ShiftOpExpr& a, const IntFunction& f, std::span<const long> point);

// Exchanges k_i and k_j (1-based).
MultiPoly swap_vars(const MultiPoly& p, int i, int j);

// Coordinate manipulations on the symbol side.
ShiftOpExpr permute_symbols(const ShiftOpExpr& a, std::span<const int> perm);  // symbol i -> perm[i-1]
ShiftOpExpr invert_symbol(const ShiftOpExpr& a, int i);                       // E_i -> E_i^{-1}
bool is_symmetric(const ShiftOpExpr& a);

enum class OperatorKind {
  THEOREM1,            // prod_{p<q} E_p (E_p^-1 + E_q^-1 - id)(E_p^-1 + E_q - id)
  INVERSE_FORM,        // prod_{p<q} (id + E_q D_p)^-1 E_p (id + E_q^-1 D_p)^-1
  BETA_TO_GAMMA,       // prod_{p<q} (E_p + E_q - E_p E_q)(E_p + E_q^-1 - E_p E_q^-1)
  GAMMA_BAR_TO_GAMMA,  // prod_{p<q} (E_p^-1 + E_q^-1 - id)(E_p^-1 E_q^-1 + id - E_q^-1)
  V_PRODUCT,           // prod_{p<q} V_{k_p,k_q},  V_{x,y} = id + E_y D_x
  ALPHA,               // prod_{p<q} (id + E_p E_q - E_p)
  NORMALIZER,          // prod_{p<q} (id + E_q D_p) E_p^-1 (id + E_q^-1 D_p)
  QUADRUPLE,           // prod_{p<q} (id+E_q D_p)(id+E_q^-1 D_p)(id-E_q E_p^-1 D_p)(id-E_q^-1 E_p^-1 D_p)
};

std::string to_string(OperatorKind kind);
std::optional<OperatorKind> parse_operator_kind(const std::string& name);

// V_{k_i,k_j} = id + E_{k_j} Delta_{k_i} on m symbols.
ShiftOpExpr v_operator(int arity, int i, int j);

// Fully expanded operator on m k-variables. INVERSE_FORM requires a degree
// bound and is exact only on polynomials of per-variable degree <= bound.
ShiftOpExpr build_operator(OperatorKind kind, int m, std::optional<int> degree_bound = std::nullopt);

// The per-pair factors whose product is build_operator(kind, m, bound), in
// (p, q) lexicographic order. Applying them one at a time is much cheaper
// than applying the expanded product to a large polynomial.
std::vector<ShiftOpExpr> operator_factors(OperatorKind kind, int m, std::optional<int> degree_bound = std::nullopt);
MultiPoly apply_factors(std::span<const ShiftOpExpr> factors, const MultiPoly& p);

// Power-series inverse in the Delta basis, truncated at per-variable Delta
// degree d. Throws NotInvertible if the Delta constant term (the sum of all
// coefficients) vanishes.
ShiftOpExpr op_invert(const ShiftOpExpr& a, int degree_bound);

// An operator that agrees with a on every polynomial of per-variable degree
// <= d, with all exponents in [0, d].
ShiftOpExpr op_truncate(const ShiftOpExpr& a, int degree_bound);

}  // namespace monotri
