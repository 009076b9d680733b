#ifndef KAL_RNG_HPP
#define KAL_RNG_HPP

#include <cstdint>

#include "kal/rational.hpp"

namespace kal {

/// SplitMix64: tiny, portable, deterministic generator. All sampling in the
/// artifact goes through this so certificates reproduce byte-for-byte from a
/// recorded seed, independent of platform or standard-library version.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). bound must be positive. The modulo bias is
  /// irrelevant at the bounds used here (≤ 2^32).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  /// Uniform in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Random nonnegative rational num/den with num ≤ max_num, 1 ≤ den ≤ max_den.
  Rational rational(std::int64_t max_num, std::int64_t max_den) {
    return Rational(range(0, max_num), range(1, max_den));
  }

  /// Derives an independent stream for a sub-task; used by sweeps that
  /// parallelize over trials.
  static std::uint64_t derive(std::uint64_t master, std::uint64_t index) {
    SplitMix64 g(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    return g.next();
  }

private:
  std::uint64_t state_;
};

} // namespace kal

#endif // KAL_RNG_HPP
