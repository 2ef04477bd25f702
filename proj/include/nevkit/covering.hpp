#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nevkit/geometry.hpp"
#include "nevkit/majorant.hpp"

namespace nevkit {

/// Disks D(center, radius) covering a union of weakly separated parts.
/// Points are addressed by their position in the concatenation of the parts.
struct Covering {
  std::vector<DiskPoint> centers;            // in creation order
  std::vector<double> radii;
  std::vector<int> center_part;              // 1-based part a center came from
  HarmonicMajorant majorant;
  double start_constant = 0.0;               // C
  double alpha = 0.0;                        // C - (n-1)
  double beta = 0.0;                         // C + (n-1)
  std::vector<std::size_t> assignment;       // point -> center index
};

struct CoveringOptions {
  /// C of the construction; nullopt picks max(n + 1, 4).
  std::optional<double> start_constant;
};

/// Inductive covering of parts[0] ∪ ... ∪ parts[n-1].
///
/// Step 1 makes every point of the first part a center with radius e^{-C H}.
/// Step k+1 enlarges each existing disk whose (R + e^{-beta_k H}/4)-enlargement
/// meets part k+1 and absorbs those points; the remaining points of part k+1
/// become new centers of radius e^{-beta_k H}/8. alpha decreases and beta
/// increases by one per step. Each point is assigned to the earliest-created
/// center whose final disk contains it.
///
/// Throws PropertyViolation if some part violates rho >= e^{-H} (witness =
/// concatenated indices of the pair) or H < log 8 at some point, and
/// InvalidInput for C <= n, C < 4, or points repeated across parts.
Covering build_covering(const std::vector<std::vector<DiskPoint>>& parts, const HarmonicMajorant& h,
                        const CoveringOptions& options = {});

struct CoveringCheck {
  bool passed = true;
  std::string detail;                  // empty when passed
  std::vector<std::size_t> witness;    // point and/or center indices
};

struct CoveringReport {
  CoveringCheck covers;        // (i)   every point lies in some disk
  CoveringCheck radii_bounds;  // (ii)  e^{-beta H} <= r <= e^{-alpha H}
  CoveringCheck gaps;          // (iii) rho(D, D') >= e^{-beta H} at both centers
  CoveringCheck one_per_part;  // (iv)  #(part_j ∩ D) <= 1
  bool all_passed() const noexcept {
    return covers.passed && radii_bounds.passed && gaps.passed && one_per_part.passed;
  }
};

/// Relative slack in the (ii)/(iii) comparisons, absorbing rounding in
/// quantities such as e^{-beta H}/8 versus e^{-(beta+1) H} at H = log 8.
inline constexpr double kCoveringRelTol = 1e-12;

/// Brute-force re-check of (i)-(iv); independent of the construction.
CoveringReport verify_covering(const Covering& cov, const std::vector<std::vector<DiskPoint>>& parts);

/// Values on the whole union that are constant on each disk: a disk meeting
/// part j (0-based) in {a} gets omega_j(a), a disk missing part j gets 0.
/// Throws PropertyViolation if a disk holds two points of part j.
std::vector<Complex> extend_values(const Covering& cov,
                                   const std::vector<std::vector<DiskPoint>>& parts, std::size_t j,
                                   const std::vector<Complex>& omega_j);

/// Constant majorant max(log 8, max -log rho over same-part pairs) + slack,
/// which satisfies the covering's separation hypothesis.
HarmonicMajorant fit_separation_majorant(const std::vector<std::vector<DiskPoint>>& parts,
                                         double slack = 1e-9);

}  // namespace nevkit
