#pragma once

#include <span>
#include <vector>

#include "nevkit/geometry.hpp"
#include "nevkit/majorant.hpp"

namespace nevkit {

/// B(z) = prod_k b_{zeros[k]}(z). The empty product is the constant 1.
class FiniteBlaschkeProduct {
 public:
  FiniteBlaschkeProduct() = default;
  explicit FiniteBlaschkeProduct(std::vector<DiskPoint> zeros) : zeros_(std::move(zeros)) {}

  const std::vector<DiskPoint>& zeros() const noexcept { return zeros_; }
  std::size_t degree() const noexcept { return zeros_.size(); }

  Complex evaluate(const DiskPoint& z) const noexcept;

  /// sum_k log rho(zeros[k], z); -inf when z is a zero.
  double log_modulus(const DiskPoint& z) const noexcept;

  /// Sum of the factor arguments, i.e. arg B(z) modulo 2pi. Meaningless at zeros.
  double argument(const DiskPoint& z) const noexcept;

  /// Copy with one occurrence of `lambda` removed; throws InvalidInput
  /// ("not a zero") otherwise.
  FiniteBlaschkeProduct deflate(const DiskPoint& lambda) const;

  friend bool operator==(const FiniteBlaschkeProduct&, const FiniteBlaschkeProduct&) = default;

 private:
  std::vector<DiskPoint> zeros_;
};

/// Product B_1 * ... * B_k as a single zero list (repeats allowed).
FiniteBlaschkeProduct multiply(std::span<const FiniteBlaschkeProduct> factors);

struct InterpolationMargin {
  /// |B_lambda(lambda)| = prod_{mu != lambda} rho(mu, lambda) = (1-|lambda|^2)|B'(lambda)|.
  double margin;
  double log_margin;
  /// (1-|lambda|)|B'(lambda)| = margin / (1 + |lambda|).
  double margin_one_minus_abs;
  double log_threshold;  // -H(lambda)
  bool satisfied;                 // margin >= e^{-H(lambda)}
  bool satisfied_one_minus_abs;   // same test on the other normalization
};

/// Interpolation margin of `sequence[index]`. Comparisons are made in log
/// scale so large sequences do not underflow. Throws InvalidInput on a bad index.
InterpolationMargin interpolation_margin(std::span<const DiskPoint> sequence, std::size_t index,
                                         const HarmonicMajorant& h);

/// Same, locating `lambda` in the sequence first; throws if absent.
InterpolationMargin interpolation_margin(std::span<const DiskPoint> sequence,
                                         const DiskPoint& lambda, const HarmonicMajorant& h);

/// Distance from z to the nearest point of the sequence (1 for an empty one).
double rho_to_set(const DiskPoint& z, std::span<const DiskPoint> sequence) noexcept;

struct LocalBoundSample {
  DiskPoint z;
  double abs_b;       // |B(z)|
  double rhs;         // e^{-H1(z)} rho(z, Lambda)
  double log_abs_b;
  double log_rhs;
  bool holds;
};

struct LocalBoundReport {
  std::vector<LocalBoundSample> samples;
  bool all_hold = true;
  std::size_t failures = 0;
};

/// Checks |B(z)| >= e^{-H1(z)} rho(z, Lambda) at each sample, in log scale.
/// A sample on Lambda has both sides zero and counts as holding.
LocalBoundReport local_lower_bound_check(std::span<const DiskPoint> sequence,
                                         const HarmonicMajorant& h1,
                                         std::span<const DiskPoint> samples);

/// Smallest constant majorant (>= log 3) for which the local lower bound
/// holds at every sample, plus `slack`.
HarmonicMajorant fit_local_lower_bound(std::span<const DiskPoint> sequence,
                                       std::span<const DiskPoint> samples, double slack = 1e-9);

}  // namespace nevkit
