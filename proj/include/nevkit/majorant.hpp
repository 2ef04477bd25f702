#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nevkit/geometry.hpp"

namespace nevkit {

/// Lower bound imposed on every majorant's constant term.
inline const double kLog3 = 1.0986122886681098;  // log(3)
/// Default cap on atom weights accepted from user input and grids.
inline constexpr double kMaxAtomWeight = 1e3;

struct PoissonAtom {
  double theta;   // boundary point e^{i theta}, theta in [0, 2pi)
  double weight;  // >= 0

  friend bool operator==(const PoissonAtom&, const PoissonAtom&) = default;
};

/// Poisson kernel P(z, e^{i theta}) = (1 - |z|^2) / |e^{i theta} - z|^2.
double poisson_kernel(const DiskPoint& z, double theta) noexcept;

/// Positive harmonic function constant + sum_j weight_j * P(z, e^{i theta_j}).
///
/// The family is closed under nonnegative linear combination with a
/// nonnegative shift, which is all the majorant bookkeeping ever needs.
/// Construction rejects constant < log 3, negative or non-finite weights.
/// Angles are reduced into [0, 2pi).
class HarmonicMajorant {
 public:
  explicit HarmonicMajorant(double constant = kLog3, std::vector<PoissonAtom> atoms = {});

  static HarmonicMajorant constant_function(double c) { return HarmonicMajorant(c); }

  double constant() const noexcept { return constant_; }
  const std::vector<PoissonAtom>& atoms() const noexcept { return atoms_; }

  double operator()(const DiskPoint& z) const noexcept { return eval(z); }
  double eval(const DiskPoint& z) const noexcept;

  /// Largest atom weight (0 for a constant majorant).
  double max_weight() const noexcept;

  friend bool operator==(const HarmonicMajorant&, const HarmonicMajorant&) = default;

 private:
  double constant_;
  std::vector<PoissonAtom> atoms_;
};

/// sum_i scales[i] * majorants[i] + shift. Throws InvalidInput on length
/// mismatch, negative scale/shift, or if the resulting constant < log 3.
HarmonicMajorant combine(std::span<const HarmonicMajorant> majorants,
                         std::span<const double> scales, double shift);

/// Scalar shorthand: scale * h + shift.
HarmonicMajorant combine(const HarmonicMajorant& h, double scale, double shift);

/// Harnack inequality for h between z and w. Always true for members of the
/// family; exposed so tests can probe the evaluator.
bool harnack_check(const HarmonicMajorant& h, const DiskPoint& z, const DiskPoint& w);

/// Candidate grid for majorant searches. Candidates are enumerated in order:
/// for each constant (ascending as given), first the bare constant, then one
/// atom for every (angle, weight) pair.
struct MajorantGrid {
  std::vector<double> constants;
  std::vector<double> atom_angles;
  std::vector<double> atom_weights;

  /// Constants log3 * 2^k, k = 0..20, no atoms.
  static MajorantGrid standard();
};

/// First grid member satisfying `accept`, or nullopt ("no witness found").
/// Weights above kMaxAtomWeight are rejected with InvalidInput.
std::optional<HarmonicMajorant> search_majorant(
    const MajorantGrid& grid, const std::function<bool(const HarmonicMajorant&)>& accept);

}  // namespace nevkit
