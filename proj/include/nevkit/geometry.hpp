#pragma once

#include <complex>
#include <utility>

namespace nevkit {

using Complex = std::complex<double>;

/// Points closer than this to the unit circle are rejected.
inline constexpr double kBoundaryMargin = 1e-15;

/// A point strictly inside the unit disk. Equality is bitwise on (re, im);
/// negative zeros are normalized away at construction.
class DiskPoint {
 public:
  constexpr DiskPoint() = default;

  /// Throws InvalidInput if the point is not finite or |z| >= 1 - kBoundaryMargin.
  DiskPoint(double re, double im);
  explicit DiskPoint(Complex z) : DiskPoint(z.real(), z.imag()) {}

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  Complex value() const noexcept { return {re_, im_}; }
  double abs() const noexcept;

  /// 1 - |z|^2 evaluated without cancellation near the boundary.
  double one_minus_abs2() const noexcept;

  friend bool operator==(const DiskPoint& a, const DiskPoint& b) noexcept;
  friend bool operator<(const DiskPoint& a, const DiskPoint& b) noexcept;

 private:
  double re_ = 0.0;
  double im_ = 0.0;
};

/// Pseudohyperbolic disk {w : rho(center, w) < radius}, radius in (0, 1).
class PseudoDisk {
 public:
  PseudoDisk(DiskPoint center, double radius);

  const DiskPoint& center() const noexcept { return center_; }
  double radius() const noexcept { return radius_; }
  bool contains(const DiskPoint& w) const noexcept;

 private:
  DiskPoint center_;
  double radius_;
};

/// Pseudohyperbolic distance |z - w| / |1 - conj(z) w|.
double rho(const DiskPoint& z, const DiskPoint& w) noexcept;

/// Disk automorphism b_lambda(z) = (z - lambda) / (1 - conj(lambda) z).
Complex blaschke_factor(const DiskPoint& lambda, const DiskPoint& z) noexcept;

struct HarnackInterval {
  double lo;
  double hi;
};

/// Ratio bounds ((1-r)/(1+r), (1+r)/(1-r)) for positive harmonic functions at
/// pseudohyperbolic distance r. Throws InvalidInput unless 0 <= r < 1.
HarnackInterval harnack_interval(double r);

/// rho(centers) - radius_a - radius_b. Negative values mean overlap.
double pseudo_disk_gap(const PseudoDisk& a, const PseudoDisk& b) noexcept;

}  // namespace nevkit
