#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "monotri/rational.hpp"

namespace monotri {

// A polynomial variable: either one of k_1..k_m or the bound x.
struct VarId {
  enum class Kind : unsigned char { X, K };
  Kind kind = Kind::X;
  int index = 0;  // 1-based for K, 0 for X

  static constexpr VarId k(int i) { return VarId{Kind::K, i}; }
  static constexpr VarId x() { return VarId{Kind::X, 0}; }
  bool is_x() const { return kind == Kind::X; }

  auto operator<=>(const VarId&) const = default;
};

std::string to_string(VarId v);

// Exponent vectors are dense: slot 0 holds the power of x, slot i the power
// of k_i. Graded lexicographic order on (x, k_1, ..., k_m); the term map
// iterates from the largest monomial down, which is the print order.
using Exponents = std::vector<int>;

struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexGreater>;

  explicit MultiPoly(int arity = 0);

  static MultiPoly constant(int arity, const Rational& c);
  static MultiPoly variable(int arity, VarId v);
  static MultiPoly monomial(int arity, Exponents exps, const Rational& c);

  int arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Exponents& exps) const;

  // Accumulates c into the coefficient of exps, erasing it if it cancels.
  void add_term(const Exponents& exps, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator+(MultiPoly a, const Rational& c);
  friend MultiPoly operator-(MultiPoly a, const Rational& c) { return a + Rational(-c); }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_arity(const MultiPoly& other, const char* op) const;

  int arity_;
  TermMap terms_;
};

// Named forms of the ring operations; all throw InvalidInput on arity mismatch.
MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);

using Point = std::map<VarId, Rational>;

Rational poly_eval(const MultiPoly& p, const Point& point);
// Convenience: k[i-1] is the value of k_i.
Rational poly_eval(const MultiPoly& p, const Rational& x, std::span<const Rational> k);
Rational poly_eval(const MultiPoly& p, long x, std::span<const long> k);

// p with v replaced by v + t.
MultiPoly poly_shift(const MultiPoly& p, VarId v, long t);

// p with v replaced by an affine form (total degree <= 1) of the same arity.
MultiPoly poly_substitute_linear(const MultiPoly& p, VarId v, const MultiPoly& form);

// Highest power of v; -1 for the zero polynomial.
int poly_degree_in(const MultiPoly& p, VarId v);
int poly_total_degree(const MultiPoly& p);

bool poly_uses(const MultiPoly& p, VarId v);

// Same terms, larger variable set. Shrinking is allowed only if the dropped
// variables do not occur.
MultiPoly with_arity(const MultiPoly& p, int arity);

// Canonical text: terms in descending graded-lex order, each written as
// `c * k1^a * k2^b * x^d` with c as num/den and unit coefficients elided,
// e.g. "x - k1 + 1".
std::string to_string(const MultiPoly& p);

// Parses the canonical form and, more generally, any expression built from
// rationals, x, k<i> (also k_i, k_{i}), + - * / ^, parentheses and implicit
// multiplication by juxtaposition. Division is only by constants. arity < 0
// infers the largest k index that occurs.
MultiPoly parse_poly(std::string_view text, int arity = -1);

}  // namespace monotri
