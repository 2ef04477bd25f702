#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace nevkit {

/// Complex number stored as mantissa * exp(log_scale). Arithmetic stays in
/// plain complex form while magnitudes are moderate and only shifts into the
/// exponent when a division by a tiny factor would overflow.
struct ScaledComplex {
  std::complex<double> mantissa{0.0, 0.0};
  double log_scale = 0.0;

  ScaledComplex() = default;
  ScaledComplex(std::complex<double> m, double s = 0.0) : mantissa(m), log_scale(s) {}

  bool is_zero() const noexcept { return mantissa == std::complex<double>(0.0, 0.0); }

  /// log|value|, -inf for zero.
  double log_abs() const noexcept {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(mantissa)) + log_scale;
  }

  /// Linear value; may overflow to inf or underflow to 0.
  std::complex<double> value() const noexcept {
    if (log_scale == 0.0) return mantissa;
    return mantissa * std::exp(log_scale);
  }

  void renormalize() noexcept {
    const double a = std::abs(mantissa);
    if (a == 0.0) {
      log_scale = 0.0;
    } else if (a > 1e150 || a < 1e-150) {
      mantissa /= a;
      log_scale += std::log(a);
    }
  }
};

inline ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return ScaledComplex(-b.mantissa, b.log_scale);
  ScaledComplex r;
  if (a.log_scale == b.log_scale) {
    r = ScaledComplex(a.mantissa - b.mantissa, a.log_scale);
  } else if (a.log_scale > b.log_scale) {
    r = ScaledComplex(a.mantissa - b.mantissa * std::exp(b.log_scale - a.log_scale), a.log_scale);
  } else {
    r = ScaledComplex(a.mantissa * std::exp(a.log_scale - b.log_scale) - b.mantissa, b.log_scale);
  }
  r.renormalize();
  return r;
}

/// Threshold below which division goes through log-magnitude + phase form.
inline constexpr double kTinyDivisor = 1e-12;

inline ScaledComplex divide(const ScaledComplex& a, std::complex<double> d) {
  const double m = std::abs(d);
  ScaledComplex r;
  if (m >= kTinyDivisor) {
    r = ScaledComplex(a.mantissa / d, a.log_scale);
  } else {
    r = ScaledComplex(a.mantissa * (std::conj(d) / m), a.log_scale - std::log(m));
  }
  r.renormalize();
  return r;
}

}  // namespace nevkit
