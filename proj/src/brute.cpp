#include "monotri/brute.hpp"

#include <algorithm>
#include <sstream>

#include "monotri/errors.hpp"

namespace monotri {

namespace {

int ceil_half(int i) { return (i + 1) / 2; }

bool strictly_increasing(std::span<const long> v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] >= v[i]) return false;
  }
  return true;
}

std::string join(std::span<const long> v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

template <typename Row>
std::string rows_text(const std::vector<Row>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << '\n';
  }
  return out.str();
}

}  // namespace

bool MonotoneTriangle::is_valid() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != i + 1) return false;
    if (!strictly_increasing(rows[i])) return false;
    if (i == 0) continue;
    const auto& above = rows[i - 1];
    const auto& row = rows[i];
    for (std::size_t j = 0; j < above.size(); ++j) {
      if (!(row[j] <= above[j] && above[j] <= row[j + 1])) return false;
    }
  }
  return true;
}

bool HalvedMonotoneTriangle::is_valid() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (static_cast<int>(row.size()) != ceil_half(static_cast<int>(i) + 1)) return false;
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (strict_rows ? row[j - 1] >= row[j] : row[j - 1] > row[j]) return false;
    }
    if (i + 1 == rows.size()) continue;
    const auto& below = rows[i + 1];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (below[j] > row[j]) return false;
      if (j + 1 < below.size() && row[j] > below[j + 1]) return false;
    }
  }
  return true;
}

AsmMatrix::AsmMatrix(int n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  if (n < 0 || entries_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw InvalidInput("AsmMatrix: expected n*n entries");
  }
  for (int v : entries_) {
    if (v < -1 || v > 1) throw InvalidInput("AsmMatrix: entries must lie in {-1,0,1}");
  }
}

AsmMatrix AsmMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw InvalidInput("AsmMatrix: matrix is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return AsmMatrix(static_cast<int>(rows.size()), std::move(flat));
}

bool AsmMatrix::is_asm() const {
  // Partial sums in {0,1} along every line, ending at 1, is exactly the
  // alternating-sign condition with unit line sums.
  for (int i = 0; i < n_; ++i) {
    int rs = 0;
    int cs = 0;
    for (int j = 0; j < n_; ++j) {
      rs += at(i, j);
      cs += at(j, i);
      if (rs < 0 || rs > 1 || cs < 0 || cs > 1) return false;
    }
    if (rs != 1 || cs != 1) return false;
  }
  return true;
}

std::string to_text(const MonotoneTriangle& t) { return rows_text(t.rows); }
std::string to_text(const HalvedMonotoneTriangle& t) { return rows_text(t.rows); }

std::string to_text(const AsmMatrix& a) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) rows[static_cast<std::size_t>(i)].push_back(a.at(i, j));
  }
  return rows_text(rows);
}

// ---------------------------------------------------------------------------
// Halved monotone triangles

namespace {

class HmtSearch {
 public:
  HmtSearch(int n, long x, bool strict, const HmtVisitor* visit)
      : n_(n), x_(x), strict_(strict), visit_(visit), rows_(static_cast<std::size_t>(n)) {}

  BigInt run(std::span<const long> bottom) {
    rows_.back().assign(bottom.begin(), bottom.end());
    count_ = 0;
    fill_row(n_ - 2, 0);
    return count_;
  }

 private:
  // rows_[i] is row i+1; fills entry j given the completed row below.
  void fill_row(int i, std::size_t j) {
    if (i < 0) {
      emit();
      return;
    }
    auto& row = rows_[static_cast<std::size_t>(i)];
    const auto& below = rows_[static_cast<std::size_t>(i) + 1];
    const std::size_t len = static_cast<std::size_t>(ceil_half(i + 1));
    if (j == 0) row.assign(len, 0);
    if (j == len) {
      fill_row(i - 1, 0);
      return;
    }
    long lo = below[j];
    long hi = j + 1 < below.size() ? below[j + 1] : x_;
    hi = std::min(hi, x_);
    if (j > 0) lo = std::max(lo, strict_ ? row[j - 1] + 1 : row[j - 1]);
    for (long v = lo; v <= hi; ++v) {
      row[j] = v;
      fill_row(i, j + 1);
    }
  }

  void emit() {
    ++count_;
    if (visit_ != nullptr && *visit_) {
      HalvedMonotoneTriangle t{rows_, strict_};
      (*visit_)(t);
    }
  }

  int n_;
  long x_;
  bool strict_;
  const HmtVisitor* visit_;
  std::vector<std::vector<long>> rows_;
  BigInt count_;
};

}  // namespace

void check_hmt_input(int n, long x, std::span<const long> bottom) {
  if (n < 1) throw InvalidInput("halved triangles need n >= 1 rows");
  if (static_cast<int>(bottom.size()) != ceil_half(n)) {
    throw InvalidInput("bottom row of a " + std::to_string(n) + "-row halved triangle needs " +
                       std::to_string(ceil_half(n)) + " entries, got " + std::to_string(bottom.size()));
  }
  if (!strictly_increasing(bottom)) throw InvalidInput("bottom row must be strictly increasing: " + join(bottom));
  if (bottom.back() > x) {
    throw InvalidInput("bottom row entry " + std::to_string(bottom.back()) + " exceeds x = " + std::to_string(x));
  }
}

BigInt for_each_hmt(int n, long x, std::span<const long> bottom, bool strict_rows, const HmtVisitor& visit) {
  check_hmt_input(n, x, bottom);
  return HmtSearch(n, x, strict_rows, &visit).run(bottom);
}

BigInt count_hmt_brute(int n, long x, std::span<const long> bottom, bool strict_rows) {
  check_hmt_input(n, x, bottom);
  return HmtSearch(n, x, strict_rows, nullptr).run(bottom);
}

BigInt count_weak_hmt_brute(int n, long x, std::span<const long> bottom) {
  return count_hmt_brute(n, x, bottom, false);
}

// ---------------------------------------------------------------------------
// Monotone triangles

namespace {

class MtSearch {
 public:
  MtSearch(std::span<const long> bottom, const MtVisitor* visit) : visit_(visit) {
    const auto n = bottom.size();
    rows_.resize(n);
    for (std::size_t i = 0; i < n; ++i) rows_[i].resize(i + 1);
    rows_.back().assign(bottom.begin(), bottom.end());
  }

  BigInt run() {
    count_ = 0;
    if (rows_.size() == 1) {
      emit();
    } else {
      fill(static_cast<int>(rows_.size()) - 2, 0);
    }
    return count_;
  }

 private:
  void fill(int i, std::size_t j) {
    if (i < 0) {
      emit();
      return;
    }
    auto& row = rows_[static_cast<std::size_t>(i)];
    const auto& below = rows_[static_cast<std::size_t>(i) + 1];
    if (j == row.size()) {
      fill(i - 1, 0);
      return;
    }
    long lo = below[j];
    if (j > 0) lo = std::max(lo, row[j - 1] + 1);
    for (long v = lo; v <= below[j + 1]; ++v) {
      row[j] = v;
      fill(i, j + 1);
    }
  }

  void emit() {
    ++count_;
    if (visit_ != nullptr && *visit_) (*visit_)(MonotoneTriangle{rows_});
  }

  const MtVisitor* visit_;
  std::vector<std::vector<long>> rows_;
  BigInt count_;
};

}  // namespace

BigInt for_each_mt(std::span<const long> bottom, const MtVisitor& visit) {
  if (bottom.empty()) throw InvalidInput("monotone triangle needs a nonempty bottom row");
  if (!strictly_increasing(bottom)) throw InvalidInput("bottom row must be strictly increasing: " + join(bottom));
  return MtSearch(bottom, &visit).run();
}

BigInt count_mt_brute(std::span<const long> bottom) { return for_each_mt(bottom, {}); }

// ---------------------------------------------------------------------------
// Extended summation

Rational extended_sum(const IntFunction& f, std::span<const long> k) {
  const std::size_t m = k.size();
  if (m < 2) throw InvalidInput("extended_sum needs at least two bounds");
  if (m == 2) {
    std::vector<long> arg(1);
    return range_sum(k[0], k[1], [&](long l) {
      arg[0] = l;
      return f(arg);
    });
  }
  // Split on the last summation variable l_{m-1}: either l_{m-1} > k_{m-1},
  // which frees l_{m-2} up to k_{m-1}, or l_{m-1} = k_{m-1}, which forces
  // l_{m-2} <= k_{m-1} - 1.
  const long k_prev = k[m - 2];
  const long k_last = k[m - 1];
  IntFunction upper = [&](std::span<const long> prefix) {
    std::vector<long> arg(prefix.begin(), prefix.end());
    arg.push_back(0);
    return range_sum(k_prev + 1, k_last, [&](long l) {
      arg.back() = l;
      return f(arg);
    });
  };
  IntFunction pinned = [&](std::span<const long> prefix) {
    std::vector<long> arg(prefix.begin(), prefix.end());
    arg.push_back(k_prev);
    return f(arg);
  };
  std::vector<long> lowered(k.begin(), k.end() - 1);
  lowered.back() = k_prev - 1;
  return extended_sum(upper, k.first(m - 1)) + extended_sum(pinned, lowered);
}

Rational HmtRecursion::value(int n, std::span<const long> k) {
  if (n < 0) throw InvalidInput("negative row count");
  if (static_cast<int>(k.size()) != ceil_half(n)) {
    throw InvalidInput("gamma(" + std::to_string(n) + ") takes " + std::to_string(ceil_half(n)) + " arguments");
  }
  if (n <= 1) return 1;
  auto key = std::make_pair(n, std::vector<long>(k.begin(), k.end()));
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  std::vector<long> bounds(k.begin(), k.end());
  if (n % 2 == 0) bounds.push_back(x_);
  IntFunction below = [this, n](std::span<const long> l) { return value(n - 1, l); };
  Rational v = extended_sum(below, bounds);
  memo_.emplace(std::move(key), v);
  return v;
}

Rational gamma_recursive(int n, long x, std::span<const long> k, bool extended) {
  if (!extended && n >= 1) check_hmt_input(n, x, k);
  HmtRecursion rec(x);
  return rec.value(n, k);
}

// ---------------------------------------------------------------------------
// Alternating sign matrices

namespace {

class AsmSearch {
 public:
  AsmSearch(int n, const AsmVisitor* visit)
      : n_(n), visit_(visit), cells_(static_cast<std::size_t>(n * n), 0), col_(static_cast<std::size_t>(n), 0) {}

  BigInt run() {
    count_ = 0;
    if (n_ == 0) return 0;
    step(0, 0);
    return count_;
  }

 private:
  void step(int cell, int row_sum) {
    const int i = cell / n_;
    const int j = cell % n_;
    if (j == 0 && cell > 0 && row_sum != 1) return;
    if (cell == n_ * n_) {
      ++count_;
      if (visit_ != nullptr && *visit_) (*visit_)(AsmMatrix(n_, cells_));
      return;
    }
    const int rs = j == 0 ? 0 : row_sum;
    for (int v = -1; v <= 1; ++v) {
      const int c = col_[static_cast<std::size_t>(j)] + v;
      const int r = rs + v;
      if (c < 0 || c > 1 || r < 0 || r > 1) continue;
      if (i == n_ - 1 && c != 1) continue;
      cells_[static_cast<std::size_t>(cell)] = v;
      col_[static_cast<std::size_t>(j)] = c;
      step(cell + 1, r);
      col_[static_cast<std::size_t>(j)] = c - v;
    }
    cells_[static_cast<std::size_t>(cell)] = 0;
  }

  int n_;
  const AsmVisitor* visit_;
  std::vector<int> cells_;
  std::vector<int> col_;
  BigInt count_;
};

}  // namespace

AsmEnumeration enumerate_asm(int n, const AsmVisitor& visit, int size_guard) {
  if (n < 1) throw InvalidInput("ASM order must be positive");
  AsmEnumeration out;
  if (n > size_guard) {
    out.warnings.push_back("enumerating " + std::to_string(n) + "x" + std::to_string(n) +
                           " ASMs exceeds the size guard of " + std::to_string(size_guard));
  }
  out.count = AsmSearch(n, &visit).run();
  return out;
}

std::vector<AsmMatrix> all_asms(int n, int size_guard) {
  std::vector<AsmMatrix> out;
  enumerate_asm(n, [&](const AsmMatrix& a) { out.push_back(a); }, size_guard);
  return out;
}

MonotoneTriangle asm_to_mt(const AsmMatrix& a) {
  if (!a.is_asm()) throw InvalidInput("asm_to_mt: not an alternating sign matrix");
  const int n = a.size();
  MonotoneTriangle t;
  std::vector<int> partial(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    std::vector<long> row;
    for (int j = 0; j < n; ++j) {
      partial[static_cast<std::size_t>(j)] += a.at(i, j);
      if (partial[static_cast<std::size_t>(j)] == 1) row.push_back(j + 1);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

AsmMatrix mt_to_asm(const MonotoneTriangle& t) {
  if (!t.is_valid()) throw InvalidInput("mt_to_asm: not a monotone triangle");
  const int n = t.size();
  for (int j = 0; j < n; ++j) {
    if (t.bottom()[static_cast<std::size_t>(j)] != j + 1) {
      throw InvalidInput("mt_to_asm: bottom row must be (1..n)");
    }
  }
  std::vector<int> entries(static_cast<std::size_t>(n * n), 0);
  std::vector<int> prev(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    for (long c : t.rows[static_cast<std::size_t>(i)]) cur[static_cast<std::size_t>(c - 1)] = 1;
    for (int j = 0; j < n; ++j) {
      entries[static_cast<std::size_t>(i * n + j)] = cur[static_cast<std::size_t>(j)] - prev[static_cast<std::size_t>(j)];
    }
    prev = std::move(cur);
  }
  return AsmMatrix(n, std::move(entries));
}

bool is_vertically_symmetric(const AsmMatrix& a) {
  const int n = a.size();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n / 2; ++j) {
      if (a.at(i, j) != a.at(i, n - 1 - j)) return false;
    }
  }
  return true;
}

HalvedMonotoneTriangle vsasm_to_hmt(const AsmMatrix& a) {
  const int size = a.size();
  if (size % 2 == 0) throw InvalidInput("vsasm_to_hmt: vertically symmetric ASMs have odd order");
  if (!a.is_asm()) throw InvalidInput("vsasm_to_hmt: not an alternating sign matrix");
  if (!is_vertically_symmetric(a)) throw InvalidInput("vsasm_to_hmt: matrix is not vertically symmetric");
  const long middle = (size + 1) / 2;
  const MonotoneTriangle t = asm_to_mt(a);
  HalvedMonotoneTriangle h;
  h.strict_rows = true;
  for (int i = 1; i < size; ++i) {
    std::vector<long> row;
    for (long v : t.rows[static_cast<std::size_t>(i)]) {
      if (v < middle) row.push_back(v);
    }
    h.rows.push_back(std::move(row));
  }
  return h;
}

BigInt count_vsasm_brute(int n, int size_guard) {
  if (n < 1) throw InvalidInput("VSASM half-order must be positive");
  BigInt count = 0;
  enumerate_asm(2 * n + 1, [&](const AsmMatrix& a) {
    if (is_vertically_symmetric(a)) ++count;
  }, size_guard);
  return count;
}

}  // namespace monotri
