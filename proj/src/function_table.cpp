#include "monotri/function_table.hpp"

namespace monotri {

Rational range_sum(long a, long b, const IntFunction1& f) {
  if (a > b) {
    Rational s = 0;
    for (long i = b + 1; i <= a - 1; ++i) s += f(i);
    return -s;
  }
  Rational s = 0;
  for (long i = a; i <= b; ++i) s += f(i);
  return s;
}

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rational RandomTable::operator()(std::span<const long> point) const {
  std::uint64_t h = splitmix(seed_ ^ (0x51ed2701ULL + point.size()));
  for (long v : point) h = splitmix(h ^ static_cast<std::uint64_t>(v));
  const auto span = static_cast<std::uint64_t>(2 * magnitude_ + 1);
  return Rational(static_cast<long>(h % span) - magnitude_);
}

IntFunction RandomTable::as_function() const {
  return [t = *this](std::span<const long> p) { return t(p); };
}

}  // namespace monotri
