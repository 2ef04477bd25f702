#include "nevkit/geometry.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>

#include "nevkit/errors.hpp"

namespace nevkit {
namespace {

// Error-free transformations (Knuth TwoSum, FMA-based TwoProduct).
void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bb = s - a;
  e = (a - (s - bb)) + (b - bb);
}

void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

// 1 - x^2 - y^2 with every rounding error carried along.
double compensated_one_minus_norm(double x, double y) {
  double px, ex, py, ey;
  two_prod(x, x, px, ex);
  two_prod(y, y, py, ey);
  double s, e1, e2;
  two_sum(1.0, -px, s, e1);
  two_sum(s, -py, s, e2);
  return s + (e1 + e2 - ex - ey);
}

double clean_zero(double v) { return v + 0.0; }

}  // namespace

DiskPoint::DiskPoint(double re, double im) : re_(clean_zero(re)), im_(clean_zero(im)) {
  if (!std::isfinite(re_) || !std::isfinite(im_)) {
    throw InvalidInput("disk point must be finite");
  }
  if (std::hypot(re_, im_) >= 1.0 - kBoundaryMargin) {
    throw InvalidInput("point (" + std::to_string(re_) + ", " + std::to_string(im_) +
                       ") is not strictly inside the unit disk");
  }
}

double DiskPoint::abs() const noexcept { return std::hypot(re_, im_); }

double DiskPoint::one_minus_abs2() const noexcept {
  return compensated_one_minus_norm(re_, im_);
}

bool operator==(const DiskPoint& a, const DiskPoint& b) noexcept {
  return std::bit_cast<std::uint64_t>(a.re_) == std::bit_cast<std::uint64_t>(b.re_) &&
         std::bit_cast<std::uint64_t>(a.im_) == std::bit_cast<std::uint64_t>(b.im_);
}

bool operator<(const DiskPoint& a, const DiskPoint& b) noexcept {
  if (a.re_ != b.re_) return a.re_ < b.re_;
  return a.im_ < b.im_;
}

PseudoDisk::PseudoDisk(DiskPoint center, double radius) : center_(center), radius_(radius) {
  if (!(radius > 0.0 && radius < 1.0)) {
    throw InvalidInput("pseudohyperbolic disk radius must lie in (0, 1)");
  }
}

bool PseudoDisk::contains(const DiskPoint& w) const noexcept {
  return rho(center_, w) < radius_;
}

// |1 - conj(z) w|^2 = |z - w|^2 + (1 - |z|^2)(1 - |w|^2), which keeps the
// denominator accurate for points near each other or near the circle.
double rho(const DiskPoint& z, const DiskPoint& w) noexcept {
  const double d = std::hypot(z.re() - w.re(), z.im() - w.im());
  if (d == 0.0) return 0.0;
  const double cross = std::sqrt(z.one_minus_abs2() * w.one_minus_abs2());
  return d / std::hypot(d, cross);
}

Complex blaschke_factor(const DiskPoint& lambda, const DiskPoint& z) noexcept {
  const Complex num = z.value() - lambda.value();
  if (num == Complex(0.0, 0.0)) return {0.0, 0.0};
  const Complex den = 1.0 - std::conj(lambda.value()) * z.value();
  const double d = std::abs(num);
  const double den_abs = std::hypot(d, std::sqrt(lambda.one_minus_abs2() * z.one_minus_abs2()));
  // Phase from the direct quotient, modulus from the stable form.
  const Complex q = num / den;
  return q * ((d / den_abs) / std::abs(q));
}

HarnackInterval harnack_interval(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw InvalidInput("harnack_interval requires 0 <= r < 1");
  }
  return {(1.0 - r) / (1.0 + r), (1.0 + r) / (1.0 - r)};
}

double pseudo_disk_gap(const PseudoDisk& a, const PseudoDisk& b) noexcept {
  return rho(a.center(), b.center()) - a.radius() - b.radius();
}

}  // namespace nevkit
