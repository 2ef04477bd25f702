#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace nevkit {

/// Unevaluated sum hi + lo with |lo| <= ulp(hi) / 2, about 106 bits.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  friend bool operator==(const DoubleDouble&, const DoubleDouble&) = default;
};

namespace dd {

inline DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DoubleDouble two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DoubleDouble add(DoubleDouble a, DoubleDouble b) {
  DoubleDouble s = two_sum(a.hi, b.hi);
  const DoubleDouble t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DoubleDouble neg(DoubleDouble a) { return {-a.hi, -a.lo}; }

inline DoubleDouble mul(DoubleDouble a, double b) {
  DoubleDouble p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble mul(DoubleDouble a, DoubleDouble b) {
  DoubleDouble p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DoubleDouble div(DoubleDouble a, DoubleDouble b) {
  const double q1 = a.hi / b.hi;
  DoubleDouble r = add(a, neg(mul(b, q1)));
  const double q2 = r.hi / b.hi;
  r = add(r, neg(mul(b, q2)));
  const double q3 = r.hi / b.hi;
  return add(quick_two_sum(q1, q2), {q3, 0.0});
}

}  // namespace dd

/// Complex value carried in double-double per component.
struct CompensatedComplex {
  DoubleDouble re;
  DoubleDouble im;

  CompensatedComplex() = default;
  CompensatedComplex(DoubleDouble r, DoubleDouble i) : re(r), im(i) {}
  explicit CompensatedComplex(std::complex<double> z) : re{z.real(), 0.0}, im{z.imag(), 0.0} {}
  CompensatedComplex(std::complex<double> hi, std::complex<double> lo) {
    re = dd::two_sum(hi.real(), lo.real());
    im = dd::two_sum(hi.imag(), lo.imag());
  }

  std::complex<double> hi() const { return {re.hi + re.lo, im.hi + im.lo}; }
  /// Remainder after rounding to hi().
  std::complex<double> lo() const {
    const auto h = hi();
    return {dd::add(re, {-h.real(), 0.0}).hi, dd::add(im, {-h.imag(), 0.0}).hi};
  }

  friend CompensatedComplex operator+(const CompensatedComplex& a, const CompensatedComplex& b) {
    return {dd::add(a.re, b.re), dd::add(a.im, b.im)};
  }
  friend CompensatedComplex operator*(const CompensatedComplex& a, std::complex<double> b) {
    return {dd::add(dd::mul(a.re, b.real()), dd::neg(dd::mul(a.im, b.imag()))),
            dd::add(dd::mul(a.re, b.imag()), dd::mul(a.im, b.real()))};
  }
  /// Division with b rescaled by a power of two first, so |b|^2 stays in range.
  friend CompensatedComplex operator/(const CompensatedComplex& a, std::complex<double> b) {
    int e = 0;
    std::frexp(std::max(std::abs(b.real()), std::abs(b.imag())), &e);
    const std::complex<double> s(std::ldexp(b.real(), -e), std::ldexp(b.imag(), -e));
    const CompensatedComplex num = a * std::conj(s);
    const DoubleDouble den = dd::add(dd::two_prod(s.real(), s.real()), dd::two_prod(s.imag(), s.imag()));
    DoubleDouble re = dd::div(num.re, den);
    DoubleDouble im = dd::div(num.im, den);
    re = {std::ldexp(re.hi, -e), std::ldexp(re.lo, -e)};
    im = {std::ldexp(im.hi, -e), std::ldexp(im.lo, -e)};
    return {re, im};
  }

  friend bool operator==(const CompensatedComplex&, const CompensatedComplex&) = default;
};

}  // namespace nevkit
