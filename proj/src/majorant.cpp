#include "nevkit/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nevkit/errors.hpp"

namespace nevkit {

double poisson_kernel(const DiskPoint& z, double theta) noexcept {
  const double dx = std::cos(theta) - z.re();
  const double dy = std::sin(theta) - z.im();
  return z.one_minus_abs2() / (dx * dx + dy * dy);
}

HarmonicMajorant::HarmonicMajorant(double constant, std::vector<PoissonAtom> atoms)
    : constant_(constant), atoms_(std::move(atoms)) {
  if (!std::isfinite(constant_) || constant_ < kLog3) {
    throw InvalidInput("majorant constant must be finite and >= log 3");
  }
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (auto& a : atoms_) {
    if (!std::isfinite(a.theta) || !std::isfinite(a.weight) || a.weight < 0.0) {
      throw InvalidInput("majorant atoms need finite angles and nonnegative weights");
    }
    a.theta = std::fmod(a.theta, two_pi);
    if (a.theta < 0.0) a.theta += two_pi;
    if (a.theta >= two_pi) a.theta = 0.0;
  }
}

double HarmonicMajorant::eval(const DiskPoint& z) const noexcept {
  double sum = constant_;
  for (const auto& a : atoms_) {
    if (a.weight != 0.0) sum += a.weight * poisson_kernel(z, a.theta);
  }
  return sum;
}

double HarmonicMajorant::max_weight() const noexcept {
  double w = 0.0;
  for (const auto& a : atoms_) w = std::max(w, a.weight);
  return w;
}

HarmonicMajorant combine(std::span<const HarmonicMajorant> majorants,
                         std::span<const double> scales, double shift) {
  if (majorants.size() != scales.size()) {
    throw InvalidInput("combine: majorant and scale lists differ in length");
  }
  if (!(shift >= 0.0)) throw InvalidInput("combine: shift must be >= 0");
  double constant = shift;
  std::vector<PoissonAtom> atoms;
  for (std::size_t i = 0; i < majorants.size(); ++i) {
    const double s = scales[i];
    if (!(s >= 0.0)) throw InvalidInput("combine: scales must be >= 0");
    constant += s * majorants[i].constant();
    for (const auto& a : majorants[i].atoms()) atoms.push_back({a.theta, s * a.weight});
  }
  if (constant < kLog3) {
    throw InvalidInput("combine: resulting constant falls below log 3");
  }
  return HarmonicMajorant(constant, std::move(atoms));
}

HarmonicMajorant combine(const HarmonicMajorant& h, double scale, double shift) {
  const double scales[] = {scale};
  return combine(std::span<const HarmonicMajorant>(&h, 1), scales, shift);
}

bool harnack_check(const HarmonicMajorant& h, const DiskPoint& z, const DiskPoint& w) {
  const auto [lo, hi] = harnack_interval(rho(z, w));
  const double ratio = h.eval(z) / h.eval(w);
  // One ulp of slack per side for the ratio's own rounding.
  constexpr double slack = 4.0 * std::numeric_limits<double>::epsilon();
  return ratio >= lo * (1.0 - slack) && ratio <= hi * (1.0 + slack);
}

MajorantGrid MajorantGrid::standard() {
  MajorantGrid g;
  for (int k = 0; k <= 20; ++k) g.constants.push_back(kLog3 * std::ldexp(1.0, k));
  return g;
}

std::optional<HarmonicMajorant> search_majorant(
    const MajorantGrid& grid, const std::function<bool(const HarmonicMajorant&)>& accept) {
  for (double w : grid.atom_weights) {
    if (!(w >= 0.0) || w > kMaxAtomWeight) {
      throw InvalidInput("grid atom weight outside [0, 1e3]");
    }
  }
  for (double c : grid.constants) {
    HarmonicMajorant bare(c);
    if (accept(bare)) return bare;
    for (double theta : grid.atom_angles) {
      for (double w : grid.atom_weights) {
        HarmonicMajorant candidate(c, {{theta, w}});
        if (accept(candidate)) return candidate;
      }
    }
  }
  return std::nullopt;
}

}  // namespace nevkit
