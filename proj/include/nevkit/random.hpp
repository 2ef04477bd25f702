#pragma once

#include <cstdint>
#include <random>

#include "nevkit/geometry.hpp"

namespace nevkit {

/// Seeded generator with a platform-independent mapping to doubles
/// (std::uniform_real_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t next() { return engine_(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

  /// Area-uniform point in the disk |z| < max_radius.
  DiskPoint point_in_disk(double max_radius);

  /// Uniform in modulus on [0, max_radius): biased toward the boundary
  /// in the hyperbolic sense, useful for stressing near-circle arithmetic.
  DiskPoint point_radial(double max_radius);

 private:
  std::mt19937_64 engine_;
};

}  // namespace nevkit
