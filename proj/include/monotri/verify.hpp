#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "monotri/function_table.hpp"
#include "monotri/multipoly.hpp"
#include "monotri/rational.hpp"

namespace monotri {

// --- building blocks shared with the test suites -------------------------

// V in coordinates (a, b) of f at p: f(p) + f(p + e_a + e_b) - f(p + e_b).
Rational v_at(const IntFunction& f, std::span<const long> p, int a, int b);
// T = (id + S) V in coordinates (a, b).
Rational t_at(const IntFunction& f, std::span<const long> p, int a, int b);

// Three-variable exchange identity for T_{k2,k3} applied to the extended sum
// of f over (k1, k2, k3, k4); f is a function on Z^3.
Rational t_identity_lhs(const IntFunction& f, std::span<const long> k);
Rational t_identity_rhs(const IntFunction& f, std::span<const long> k);
// Two-variable version for h on Z^2 and bounds (k1, k2, k3).
Rational t_identity_two_var_lhs(const IntFunction& h, std::span<const long> k);
Rational t_identity_two_var_rhs(const IntFunction& h, std::span<const long> k);

// Merging rule at split position i (2 <= i <= m - 2, 1-based) for a
// function a on Z^{m-1} and bounds k of length m.
Rational merge_lhs(const IntFunction& a, std::span<const long> k);
Rational merge_rhs(const IntFunction& a, std::span<const long> k, int i);

// --- suites ----------------------------------------------------------------

struct PropertyResult {
  std::string name;
  long instances = 0;
  long failures = 0;
  std::optional<std::string> counterexample;  // first failure

  bool passed() const { return failures == 0 && instances > 0; }
};

struct VerifyOptions {
  std::string suite = "all";  // all | recursion | operators | symmetry | genfun | asm
  int max_rows = 6;
  int max_x = 6;
  std::uint64_t seed = 0;
  int instances = 100;  // random instances per randomized property
  bool unsafe_sizes = false;
};

struct VerifyReport {
  std::vector<PropertyResult> properties;  // sorted by name
  bool passed() const;
};

const std::vector<std::string>& verify_suites();

// Throws InvalidInput for an unknown suite or bounds beyond the guards.
VerifyReport run_verify(const VerifyOptions& opts);

}  // namespace monotri
