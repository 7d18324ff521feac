#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "monotri/function_table.hpp"
#include "monotri/rational.hpp"

namespace monotri {

// Default largest ASM order enumerated without an explicit override.
inline constexpr int kAsmSizeGuard = 6;

// rows[0] is the top row; rows[i] has i + 1 entries.
struct MonotoneTriangle {
  std::vector<std::vector<long>> rows;

  int size() const { return static_cast<int>(rows.size()); }
  const std::vector<long>& bottom() const { return rows.back(); }
  bool is_valid() const;
  friend bool operator==(const MonotoneTriangle&, const MonotoneTriangle&) = default;
};

// rows[i-1] is row i and has ceil(i/2) entries.
struct HalvedMonotoneTriangle {
  std::vector<std::vector<long>> rows;
  bool strict_rows = true;

  int size() const { return static_cast<int>(rows.size()); }
  bool is_valid() const;
  friend bool operator==(const HalvedMonotoneTriangle&, const HalvedMonotoneTriangle&) = default;
};

class AsmMatrix {
 public:
  AsmMatrix() = default;
  // Row-major entries; throws InvalidInput unless n*n values in {-1,0,1}.
  AsmMatrix(int n, std::vector<int> entries);
  static AsmMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int size() const { return n_; }
  int at(int row, int col) const { return entries_[static_cast<std::size_t>(row * n_ + col)]; }
  const std::vector<int>& entries() const { return entries_; }

  // Row and column sums are 1 and nonzero entries alternate in sign.
  bool is_asm() const;

  friend bool operator==(const AsmMatrix&, const AsmMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<int> entries_;
};

// One row per line, entries separated by single spaces.
std::string to_text(const MonotoneTriangle& t);
std::string to_text(const HalvedMonotoneTriangle& t);
std::string to_text(const AsmMatrix& a);

// --- halved monotone triangles ------------------------------------------

using HmtVisitor = std::function<void(const HalvedMonotoneTriangle&)>;

// Counts halved monotone triangles with n rows, bottom row `bottom` (length
// ceil(n/2), strictly increasing) and no entry above x, by backtracking from
// the bottom row upwards. With strict_rows = false rows may repeat entries.
// Throws InvalidInput unless n >= 1, the bottom row has ceil(n/2) strictly
// increasing entries and its last entry is <= x.
void check_hmt_input(int n, long x, std::span<const long> bottom);

BigInt count_hmt_brute(int n, long x, std::span<const long> bottom, bool strict_rows = true);
BigInt count_weak_hmt_brute(int n, long x, std::span<const long> bottom);
BigInt for_each_hmt(int n, long x, std::span<const long> bottom, bool strict_rows, const HmtVisitor& visit);

// --- monotone triangles -------------------------------------------------

using MtVisitor = std::function<void(const MonotoneTriangle&)>;

BigInt count_mt_brute(std::span<const long> bottom);
BigInt for_each_mt(std::span<const long> bottom, const MtVisitor& visit);

// --- extended summation and the row recursion ---------------------------

/// Sum of f over all strictly increasing (l_1..l_{m-1}) with
/// k_i <= l_i <= k_{i+1}, extended to arbitrary integer k by the recursive
/// split on the last coordinate together with the signed-range convention
/// of range_sum. Requires m = k.size() >= 2.
Rational extended_sum(const IntFunction& f, std::span<const long> k);

// gamma(n, x; k) through the row recursion with memoisation. One instance
// per x; values for different n and k share the memo table.
class HmtRecursion {
 public:
  explicit HmtRecursion(long x) : x_(x) {}

  long x() const { return x_; }
  // k.size() must be ceil(n/2); any integers are accepted.
  Rational value(int n, std::span<const long> k);

 private:
  long x_;
  std::map<std::pair<int, std::vector<long>>, Rational> memo_;
};

// With extended = false the bottom row must be strictly increasing with
// entries <= x; with extended = true any integer tuple is accepted.
Rational gamma_recursive(int n, long x, std::span<const long> k, bool extended = false);

// --- alternating sign matrices ------------------------------------------

using AsmVisitor = std::function<void(const AsmMatrix&)>;

struct AsmEnumeration {
  BigInt count;
  std::vector<std::string> warnings;
};

// Exhaustive cell-by-cell search keeping every row and column partial sum in
// {0, 1}. Orders above size_guard still run but record a warning.
AsmEnumeration enumerate_asm(int n, const AsmVisitor& visit = {}, int size_guard = kAsmSizeGuard);
std::vector<AsmMatrix> all_asms(int n, int size_guard = kAsmSizeGuard);

// Row i of the triangle lists the columns (1-based) whose partial column sum
// through row i equals 1.
MonotoneTriangle asm_to_mt(const AsmMatrix& a);
// Inverse of asm_to_mt; the bottom row must be (1, ..., n).
AsmMatrix mt_to_asm(const MonotoneTriangle& t);

bool is_vertically_symmetric(const AsmMatrix& a);

// A (2n+1)x(2n+1) vertically symmetric ASM to the halved triangle with 2n
// rows, bottom row (1..n) and entries <= n: drop the top row of the monotone
// triangle and keep the entries left of the constant middle column n+1.
HalvedMonotoneTriangle vsasm_to_hmt(const AsmMatrix& a);

BigInt count_vsasm_brute(int n, int size_guard = kAsmSizeGuard);

}  // namespace monotri
