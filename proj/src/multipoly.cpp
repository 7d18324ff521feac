#include "monotri/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "monotri/errors.hpp"

namespace monotri {

std::string to_string(VarId v) { return v.is_x() ? std::string("x") : "k" + std::to_string(v.index); }

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

std::size_t slot_of(VarId v, int arity) {
  if (v.is_x()) return 0;
  if (v.index < 1 || v.index > arity) {
    throw InvalidInput("variable " + to_string(v) + " outside arity " + std::to_string(arity));
  }
  return static_cast<std::size_t>(v.index);
}

}  // namespace

MultiPoly::MultiPoly(int arity) : arity_(arity) {
  if (arity < 0) throw InvalidInput("negative arity");
}

MultiPoly MultiPoly::constant(int arity, const Rational& c) {
  MultiPoly p(arity);
  p.add_term(Exponents(static_cast<std::size_t>(arity) + 1, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int arity, VarId v) {
  MultiPoly p(arity);
  Exponents e(static_cast<std::size_t>(arity) + 1, 0);
  e[slot_of(v, arity)] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(int arity, Exponents exps, const Rational& c) {
  if (exps.size() != static_cast<std::size_t>(arity) + 1) {
    throw InvalidInput("exponent vector length does not match arity");
  }
  if (std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; })) {
    throw InvalidInput("negative exponent in polynomial monomial");
  }
  MultiPoly p(arity);
  p.add_term(exps, c);
  return p;
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_same_arity(const MultiPoly& other, const char* op) const {
  if (arity_ != other.arity_) {
    throw InvalidInput(std::string(op) + ": arity mismatch (" + std::to_string(arity_) + " vs " +
                       std::to_string(other.arity_) + ")");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_same_arity(other, "poly_add");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_same_arity(other, "poly_sub");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_arity(b, "poly_mul");
  MultiPoly out(a.arity_);
  Exponents e(static_cast<std::size_t>(a.arity_) + 1);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator+(MultiPoly a, const Rational& c) {
  a.add_term(Exponents(static_cast<std::size_t>(a.arity_) + 1, 0), c);
  return a;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

Rational poly_eval(const MultiPoly& p, const Point& point) {
  const auto n = static_cast<std::size_t>(p.arity()) + 1;
  std::vector<const Rational*> values(n, nullptr);
  for (const auto& [v, val] : point) {
    if (!v.is_x() && v.index > p.arity()) continue;
    values[slot_of(v, p.arity())] = &val;
  }
  Rational total = 0;
  Rational term;
  mpq_class power;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] == 0) continue;
      if (values[i] == nullptr) {
        throw InvalidInput("poly_eval: no value for " +
                           to_string(i == 0 ? VarId::x() : VarId::k(static_cast<int>(i))));
      }
      mpz_pow_ui(power.get_num_mpz_t(), values[i]->get_num_mpz_t(), static_cast<unsigned long>(e[i]));
      mpz_pow_ui(power.get_den_mpz_t(), values[i]->get_den_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= power;
    }
    total += term;
  }
  return total;
}

Rational poly_eval(const MultiPoly& p, const Rational& x, std::span<const Rational> k) {
  Point pt{{VarId::x(), x}};
  for (std::size_t i = 0; i < k.size(); ++i) pt.emplace(VarId::k(static_cast<int>(i) + 1), k[i]);
  return poly_eval(p, pt);
}

Rational poly_eval(const MultiPoly& p, long x, std::span<const long> k) {
  std::vector<Rational> kr(k.begin(), k.end());
  return poly_eval(p, Rational(x), kr);
}

MultiPoly poly_shift(const MultiPoly& p, VarId v, long t) {
  const std::size_t s = slot_of(v, p.arity());
  if (t == 0) return p;
  MultiPoly out(p.arity());
  std::vector<Rational> powers{1};
  Exponents e;
  for (const auto& [exps, c] : p.terms()) {
    const int d = exps[s];
    while (static_cast<int>(powers.size()) <= d) powers.push_back(powers.back() * t);
    e = exps;
    BigInt binom = 1;
    for (int j = d; j >= 0; --j) {
      // (v + t)^d = sum_j C(d, j) t^(d-j) v^j, walking j downwards.
      e[s] = j;
      out.add_term(e, c * Rational(binom) * powers[static_cast<std::size_t>(d - j)]);
      binom = binom * j / (d - j + 1);
    }
  }
  return out;
}

MultiPoly poly_substitute_linear(const MultiPoly& p, VarId v, const MultiPoly& form) {
  if (form.arity() != p.arity()) throw InvalidInput("poly_substitute_linear: arity mismatch");
  if (poly_total_degree(form) > 1) {
    throw InvalidInput("poly_substitute_linear: substitution form is not affine");
  }
  const std::size_t s = slot_of(v, p.arity());
  std::vector<MultiPoly> powers{MultiPoly::constant(p.arity(), 1)};
  MultiPoly out(p.arity());
  for (const auto& [exps, c] : p.terms()) {
    const int d = exps[s];
    while (static_cast<int>(powers.size()) <= d) powers.push_back(powers.back() * form);
    Exponents rest = exps;
    rest[s] = 0;
    out += MultiPoly::monomial(p.arity(), rest, c) * powers[static_cast<std::size_t>(d)];
  }
  return out;
}

int poly_degree_in(const MultiPoly& p, VarId v) {
  if (p.is_zero()) return -1;
  const std::size_t s = slot_of(v, p.arity());
  int d = 0;
  for (const auto& [e, c] : p.terms()) d = std::max(d, e[s]);
  return d;
}

int poly_total_degree(const MultiPoly& p) {
  if (p.is_zero()) return -1;
  // The first term is the graded-lex maximum.
  const auto& e = p.terms().begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool poly_uses(const MultiPoly& p, VarId v) { return poly_degree_in(p, v) > 0; }

MultiPoly with_arity(const MultiPoly& p, int arity) {
  MultiPoly out(arity);
  for (const auto& [e, c] : p.terms()) {
    Exponents ne(static_cast<std::size_t>(arity) + 1, 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= ne.size()) throw InvalidInput("with_arity: k" + std::to_string(i) + " occurs");
      ne[i] = e[i];
    }
    out.add_term(ne, c);
  }
  return out;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 1; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = "k" + std::to_string(i);
      if (e[i] > 1) f += "^" + std::to_string(e[i]);
      factors.push_back(std::move(f));
    }
    if (e[0] > 0) factors.push_back(e[0] > 1 ? "x^" + std::to_string(e[0]) : std::string("x"));

    if (factors.empty()) {
      out << to_string(mag);
      continue;
    }
    if (mag != 1) out << to_string(mag) << " * ";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i > 0) out << " * ";
      out << factors[i];
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Token {
  enum class Kind { Number, Var, Op, LParen, RParen, End };
  Kind kind = Kind::End;
  BigInt number;
  VarId var;
  char op = 0;
};

Token bare(Token::Kind kind) {
  Token t;
  t.kind = kind;
  return t;
}

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      if (pos_ >= s_.size()) break;
      const char ch = s_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        Token t;
        t.kind = Token::Kind::Number;
        t.number = BigInt(std::string(s_.substr(start, pos_ - start)));
        out.push_back(std::move(t));
      } else if (ch == 'x') {
        ++pos_;
        Token t;
        t.kind = Token::Kind::Var;
        t.var = VarId::x();
        out.push_back(t);
      } else if (ch == 'k') {
        ++pos_;
        bool braced = false;
        if (pos_ < s_.size() && s_[pos_] == '_') ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '{') {
          braced = true;
          ++pos_;
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected index after k");
        const int idx = std::stoi(std::string(s_.substr(start, pos_ - start)));
        if (idx < 1) fail("k indices are 1-based");
        if (braced) {
          if (pos_ >= s_.size() || s_[pos_] != '}') fail("unterminated k_{");
          ++pos_;
        }
        Token t;
        t.kind = Token::Kind::Var;
        t.var = VarId::k(idx);
        out.push_back(t);
      } else if (ch == '+' || ch == '-' || ch == '*' || ch == '/' || ch == '^') {
        ++pos_;
        Token t;
        t.kind = Token::Kind::Op;
        t.op = ch;
        out.push_back(t);
      } else if (ch == '(') {
        ++pos_;
        out.push_back(bare(Token::Kind::LParen));
      } else if (ch == ')') {
        ++pos_;
        out.push_back(bare(Token::Kind::RParen));
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
    }
    out.push_back(bare(Token::Kind::End));
    return out;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidInput("parse_poly: " + msg + " at offset " + std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  Parser(std::vector<Token> toks, int arity) : toks_(std::move(toks)), arity_(arity) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    if (peek().kind != Token::Kind::End) fail("trailing input");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at_op(char c) const { return peek().kind == Token::Kind::Op && peek().op == c; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidInput("parse_poly: " + msg + " at token " + std::to_string(pos_));
  }

  bool starts_factor() const {
    const auto k = peek().kind;
    return k == Token::Kind::Number || k == Token::Kind::Var || k == Token::Kind::LParen;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    while (at_op('+') || at_op('-')) {
      const char op = next().op;
      MultiPoly rhs = term();
      if (op == '+') acc += rhs;
      else acc -= rhs;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = unary();
    while (true) {
      if (at_op('*')) {
        next();
        acc = acc * unary();
      } else if (at_op('/')) {
        next();
        MultiPoly d = unary();
        if (poly_total_degree(d) > 0 || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Rational(1) / d.terms().begin()->second;
      } else if (starts_factor()) {
        acc = acc * unary();
      } else {
        return acc;
      }
    }
  }

  MultiPoly unary() {
    if (at_op('-')) {
      next();
      return -unary();
    }
    if (at_op('+')) {
      next();
      return unary();
    }
    return power();
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (at_op('^')) {
      next();
      if (peek().kind != Token::Kind::Number) fail("exponent must be a nonnegative integer");
      const BigInt e = next().number;
      if (!e.fits_uint_p()) fail("exponent too large");
      MultiPoly out = MultiPoly::constant(arity_, 1);
      for (unsigned long i = 0; i < e.get_ui(); ++i) out = out * base;
      return out;
    }
    return base;
  }

  MultiPoly primary() {
    const Token& t = next();
    switch (t.kind) {
      case Token::Kind::Number:
        return MultiPoly::constant(arity_, Rational(t.number));
      case Token::Kind::Var:
        return MultiPoly::variable(arity_, t.var);
      case Token::Kind::LParen: {
        MultiPoly inner = expr();
        if (next().kind != Token::Kind::RParen) fail("expected ')'");
        return inner;
      }
      default:
        fail("expected a number, variable or '('");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int arity_;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, int arity) {
  auto toks = Lexer(text).run();
  if (arity < 0) {
    arity = 0;
    for (const auto& t : toks) {
      if (t.kind == Token::Kind::Var && !t.var.is_x()) arity = std::max(arity, t.var.index);
    }
  }
  for (const auto& t : toks) {
    if (t.kind == Token::Kind::Var && !t.var.is_x() && t.var.index > arity) {
      throw InvalidInput("parse_poly: " + to_string(t.var) + " exceeds arity " + std::to_string(arity));
    }
  }
  return Parser(std::move(toks), arity).parse();
}

}  // namespace monotri
