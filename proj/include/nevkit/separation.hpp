#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nevkit/geometry.hpp"
#include "nevkit/majorant.hpp"

namespace nevkit {

// ---------------------------------------------------------------------------
// Weak separation and counting
// ---------------------------------------------------------------------------

struct SeparationResult {
  bool separated = true;
  /// First violating pair (i < j) in lexicographic order.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
};

/// Disks D(lambda, e^{-H(lambda)}) pairwise disjoint, tested as
/// rho(lambda, lambda') >= e^{-H(lambda)} + e^{-H(lambda')}.
SeparationResult weakly_separated(std::span<const DiskPoint> points, const HarmonicMajorant& h);

struct CountResult {
  std::size_t max_count = 0;
  std::size_t witness = 0;  // first point attaining max_count
};

/// max over lambda of #(Lambda ∩ D(lambda, e^{-H(lambda)})), lambda included.
CountResult count_condition(std::span<const DiskPoint> points, const HarmonicMajorant& h);

// ---------------------------------------------------------------------------
// Splitting into weakly separated parts
// ---------------------------------------------------------------------------

struct PartitionResult {
  std::vector<std::vector<std::size_t>> parts;  // indices into the input, n parts
  HarmonicMajorant witness;                     // majorant the parts are separated under
  std::vector<SeparationResult> part_checks;    // weakly_separated(part, witness)
  bool verified = true;
};

/// Splits a sequence with count_condition <= n into n weakly separated parts
/// by peeling off full clusters at radius e^{-10G} level by level (G = H,
/// 10H, 100H, ...). The witness is 10^{n-1} H + log 8; every part is checked
/// against it and the outcome stored in `part_checks`.
/// Throws PropertyViolation (witness = the offending point) if the count
/// exceeds n, InvalidInput if n < 1.
PartitionResult partition_weakly_separated(std::span<const DiskPoint> points,
                                           const HarmonicMajorant& h, int n);

// ---------------------------------------------------------------------------
// Dyadic squares, critical radii, counterexample
// ---------------------------------------------------------------------------

/// {r e^{i theta} : 1-2^{-k} <= r < 1-2^{-k-1}, 2pi j/2^k <= theta < 2pi (j+1)/2^k}.
struct DyadicSquare {
  int k = 0;
  std::int64_t j = 0;

  friend bool operator==(const DyadicSquare&, const DyadicSquare&) = default;
  friend auto operator<=>(const DyadicSquare&, const DyadicSquare&) = default;
};

DyadicSquare dyadic_square_of(const DiskPoint& z);
bool dyadic_square_contains(const DyadicSquare& q, const DiskPoint& z);

struct CriticalRadius {
  DyadicSquare square;
  /// min over lambda in the square of the distance to its n-th nearest other
  /// point; +inf when |Lambda| <= n.
  double radius = std::numeric_limits<double>::infinity();
  std::size_t alpha = 0;  // point attaining it (first in input order)
};

/// One entry per nonempty dyadic square, ordered by (k, j).
std::vector<CriticalRadius> critical_radii(std::span<const DiskPoint> points, int n);

struct CounterexampleOptions {
  /// Only squares with r_alpha <= max_radius are eligible for L.
  double max_radius = 1.0;
};

struct CounterexampleEntry {
  std::size_t alpha = 0;
  DyadicSquare square;
  double radius = 0.0;                 // r_alpha
  std::vector<std::size_t> nearest;    // lambda_1^alpha .. lambda_n^alpha
  /// |D^{n-1} omega(lambda_1^alpha..lambda_{n-1}^alpha, alpha)|, equal to 1.
  double order_n_minus_1 = 0.0;
  /// |D^n omega(lambda_1^alpha..lambda_n^alpha, alpha)|, equal to 1/r_alpha.
  double order_n = 0.0;
  double blowup_target = 0.0;          // 1 / r_alpha
};

struct Counterexample {
  int n = 1;
  std::vector<Complex> values;         // omega on the input points
  std::vector<std::size_t> selected;   // L, in selection order
  std::vector<CounterexampleEntry> entries;
};

/// omega(alpha) = prod_{j<n} b_alpha(lambda_j^alpha) on a greedy subset L of
/// the critical points (increasing r_alpha, disks D(alpha, r_alpha) kept
/// disjoint), zero elsewhere. Throws PropertyViolation
/// ("sequence too separated to build counterexample") when nothing is eligible.
Counterexample build_counterexample(std::span<const DiskPoint> points, int n,
                                    const CounterexampleOptions& options = {});

/// The n nearest other points of points[alpha] by increasing rho, ties by index.
std::vector<std::size_t> nearest_points(std::span<const DiskPoint> points, std::size_t alpha,
                                        std::size_t count);

}  // namespace nevkit
