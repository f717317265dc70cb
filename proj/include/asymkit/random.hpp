#pragma once

#include <cstdint>

namespace asymkit {

/// Seeded splittable generator (SplitMix64). Streams are fully determined by
/// the seed, independent of the standard library's distribution code, so
/// sampled reports are reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t seed() const { return seed_origin_; }

  std::uint64_t next_u64();

  /// Independent child stream; the parent is not advanced.
  Rng split(std::uint64_t stream) const;

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform double in [0, 1).
  double uniform01();

  /// Standard normal via Box-Muller.
  double normal();

 private:
  Rng(std::uint64_t state, std::uint64_t origin) : state_(state), seed_origin_(origin) {}

  std::uint64_t state_;
  std::uint64_t seed_origin_ = state_;
};

}  // namespace asymkit
