#pragma once

// Deterministic random points for probes.  SplitMix64 keeps the stream
// identical across platforms and compilers (std::mt19937 distributions are
// not portable); every randomized routine takes an explicit seed and the
// seed is echoed into reports.

#include "genmat/rational.hpp"

#include <cstdint>
#include <vector>

namespace genmat {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), rejection-sampled so the stream is unbiased.
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do { v = next_u64(); } while (v >= limit);
    return v % n;
  }

  // Integer in [-bound, bound]; zero excluded when avoid_zero.
  long long integer(long long bound, bool avoid_zero) {
    for (;;) {
      long long v = static_cast<long long>(below(2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
      if (!avoid_zero || v != 0) return v;
    }
  }

 private:
  std::uint64_t state_;
};

// Deterministic specialization points.  bound must be >= 2 so points have
// room to separate polynomials; entries avoid zero by default.
inline std::vector<Rational> random_rational_point(std::uint64_t seed, std::size_t count,
                                                   long long bound = 10, bool avoid_zero = true) {
  if (bound < 2) throw std::invalid_argument("random_rational_point: bound must be >= 2");
  Rng rng(seed);
  std::vector<Rational> pt;
  pt.reserve(count);
  for (std::size_t i = 0; i < count; ++i) pt.emplace_back(rng.integer(bound, avoid_zero));
  return pt;
}

}  // namespace genmat
