#include "nevkit/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nevkit/errors.hpp"

namespace nevkit {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

Complex FiniteBlaschkeProduct::evaluate(const DiskPoint& z) const noexcept {
  Complex p(1.0, 0.0);
  for (const auto& zero : zeros_) p *= blaschke_factor(zero, z);
  return p;
}

double FiniteBlaschkeProduct::log_modulus(const DiskPoint& z) const noexcept {
  double s = 0.0;
  for (const auto& zero : zeros_) {
    const double r = rho(zero, z);
    if (r == 0.0) return kNegInf;
    s += std::log(r);
  }
  return s;
}

double FiniteBlaschkeProduct::argument(const DiskPoint& z) const noexcept {
  double a = 0.0;
  for (const auto& zero : zeros_) a += std::arg(blaschke_factor(zero, z));
  return std::remainder(a, 2.0 * std::numbers::pi);
}

FiniteBlaschkeProduct FiniteBlaschkeProduct::deflate(const DiskPoint& lambda) const {
  auto it = std::find(zeros_.begin(), zeros_.end(), lambda);
  if (it == zeros_.end()) throw InvalidInput("deflate: not a zero");
  std::vector<DiskPoint> rest;
  rest.reserve(zeros_.size() - 1);
  rest.insert(rest.end(), zeros_.begin(), it);
  rest.insert(rest.end(), std::next(it), zeros_.end());
  return FiniteBlaschkeProduct(std::move(rest));
}

FiniteBlaschkeProduct multiply(std::span<const FiniteBlaschkeProduct> factors) {
  std::vector<DiskPoint> zeros;
  for (const auto& f : factors) zeros.insert(zeros.end(), f.zeros().begin(), f.zeros().end());
  return FiniteBlaschkeProduct(std::move(zeros));
}

InterpolationMargin interpolation_margin(std::span<const DiskPoint> sequence, std::size_t index,
                                         const HarmonicMajorant& h) {
  if (index >= sequence.size()) throw InvalidInput("interpolation_margin: point not in sequence");
  const DiskPoint& lambda = sequence[index];
  double log_margin = 0.0;
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    if (k == index) continue;
    const double r = rho(sequence[k], lambda);
    if (r == 0.0) throw InvalidInput("interpolation_margin: sequence has repeated points");
    log_margin += std::log(r);
  }
  InterpolationMargin m;
  m.log_margin = log_margin;
  m.margin = std::exp(log_margin);
  m.margin_one_minus_abs = m.margin / (1.0 + lambda.abs());
  m.log_threshold = -h.eval(lambda);
  m.satisfied = log_margin >= m.log_threshold;
  m.satisfied_one_minus_abs = log_margin - std::log1p(lambda.abs()) >= m.log_threshold;
  return m;
}

InterpolationMargin interpolation_margin(std::span<const DiskPoint> sequence,
                                         const DiskPoint& lambda, const HarmonicMajorant& h) {
  auto it = std::find(sequence.begin(), sequence.end(), lambda);
  if (it == sequence.end()) throw InvalidInput("interpolation_margin: point not in sequence");
  return interpolation_margin(sequence, static_cast<std::size_t>(it - sequence.begin()), h);
}

double rho_to_set(const DiskPoint& z, std::span<const DiskPoint> sequence) noexcept {
  double best = 1.0;
  for (const auto& p : sequence) best = std::min(best, rho(z, p));
  return best;
}

LocalBoundReport local_lower_bound_check(std::span<const DiskPoint> sequence,
                                         const HarmonicMajorant& h1,
                                         std::span<const DiskPoint> samples) {
  if (sequence.empty()) throw InvalidInput("local_lower_bound_check: empty sequence");
  const FiniteBlaschkeProduct b(std::vector<DiskPoint>(sequence.begin(), sequence.end()));
  LocalBoundReport report;
  report.samples.reserve(samples.size());
  for (const auto& z : samples) {
    LocalBoundSample s{z, 0.0, 0.0, 0.0, 0.0, false};
    s.log_abs_b = b.log_modulus(z);
    const double dist = rho_to_set(z, sequence);
    s.log_rhs = dist == 0.0 ? kNegInf : std::log(dist) - h1.eval(z);
    s.abs_b = std::exp(s.log_abs_b);
    s.rhs = std::exp(s.log_rhs);
    s.holds = s.log_abs_b >= s.log_rhs;
    if (!s.holds) {
      report.all_hold = false;
      ++report.failures;
    }
    report.samples.push_back(s);
  }
  return report;
}

HarmonicMajorant fit_local_lower_bound(std::span<const DiskPoint> sequence,
                                       std::span<const DiskPoint> samples, double slack) {
  const FiniteBlaschkeProduct b(std::vector<DiskPoint>(sequence.begin(), sequence.end()));
  double c = kLog3;
  for (const auto& z : samples) {
    const double dist = rho_to_set(z, sequence);
    if (dist == 0.0) continue;
    c = std::max(c, std::log(dist) - b.log_modulus(z));
  }
  return HarmonicMajorant(c + slack);
}

}  // namespace nevkit
