#include "nevkit/random.hpp"

#include <cmath>
#include <numbers>

namespace nevkit {

DiskPoint Rng::point_in_disk(double max_radius) {
  const double r = max_radius * std::sqrt(uniform());
  const double t = 2.0 * std::numbers::pi * uniform();
  return DiskPoint(r * std::cos(t), r * std::sin(t));
}

DiskPoint Rng::point_radial(double max_radius) {
  const double r = max_radius * uniform();
  const double t = 2.0 * std::numbers::pi * uniform();
  return DiskPoint(r * std::cos(t), r * std::sin(t));
}

}  // namespace nevkit
