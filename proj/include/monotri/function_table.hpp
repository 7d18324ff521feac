#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "monotri/rational.hpp"

namespace monotri {

// Functions Z^r -> Q, used for summation identities that hold for arbitrary
// functions and not only polynomials.
using IntFunction = std::function<Rational(std::span<const long>)>;
using IntFunction1 = std::function<Rational(long)>;

/// Sum of f(i) for i = a..b with the signed-range convention:
/// if a > b the sum is -(f(b+1) + ... + f(a-1)), so an a..a-1 range is 0.
Rational range_sum(long a, long b, const IntFunction1& f);

// A deterministic pseudo-random integer table on all of Z^r. Values depend
// only on (seed, coordinates), so two tables with the same seed agree
// everywhere and no grid bounds are needed.
class RandomTable {
 public:
  RandomTable(std::uint64_t seed, long magnitude = 9) : seed_(seed), magnitude_(magnitude) {}

  Rational operator()(std::span<const long> point) const;
  IntFunction as_function() const;

 private:
  std::uint64_t seed_;
  long magnitude_;
};

}  // namespace monotri
