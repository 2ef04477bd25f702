#pragma once

#include <span>
#include <vector>

#include "nevkit/blaschke.hpp"
#include "nevkit/compensated.hpp"
#include "nevkit/geometry.hpp"
#include "nevkit/majorant.hpp"

namespace nevkit {

/// Blaschke–Lagrange interpolant on distinct nodes:
///   g(z) = sum_k v_k B_k(z) / B_k(lambda_k),  B_k = B / b_{lambda_k}.
/// Exact at the nodes and bounded on the disk by sum_k |v_k| / margin_k.
/// Values may carry a low-order part; coefficients and sums are kept in
/// double-double so chained stages do not lose the digits cancelled at nodes.
class BaseInterpolant {
 public:
  BaseInterpolant() = default;
  /// Throws InvalidInput on duplicate nodes, size mismatch, or non-finite values.
  /// `values_lo` is empty or holds one low-order correction per value.
  BaseInterpolant(std::vector<DiskPoint> nodes, std::vector<Complex> values,
                  std::vector<Complex> values_lo = {});

  const std::vector<DiskPoint>& nodes() const noexcept { return nodes_; }
  const std::vector<Complex>& values() const noexcept { return values_; }
  const std::vector<Complex>& values_lo() const noexcept { return values_lo_; }
  const std::vector<CompensatedComplex>& coefficients() const noexcept { return coeffs_; }
  const std::vector<double>& margins() const noexcept { return margins_; }

  /// sup_k |v_k| / margin_k, an upper bound for |g| on the disk.
  double growth_bound() const noexcept { return growth_; }

  Complex operator()(const DiskPoint& z) const { return evaluate(z); }
  Complex evaluate(const DiskPoint& z) const { return evaluate_compensated(z).hi(); }
  CompensatedComplex evaluate_compensated(const DiskPoint& z) const;

 private:
  std::vector<DiskPoint> nodes_;
  std::vector<Complex> values_;
  std::vector<Complex> values_lo_;
  std::vector<CompensatedComplex> coeffs_;   // v_k / B_k(lambda_k)
  std::vector<double> margins_;   // |B_k(lambda_k)|
  double growth_ = 0.0;
};

BaseInterpolant base_interpolate(std::vector<DiskPoint> nodes, std::vector<Complex> values);
/// Same with compensated values, split into value and low-order part.
BaseInterpolant base_interpolate_compensated(std::vector<DiskPoint> nodes,
                                            const std::vector<CompensatedComplex>& values);

struct NearestPairing {
  std::size_t part = 0;     // earlier part i (0-based)
  std::size_t point = 0;    // index within that part
  double distance = 0.0;    // rho(node, Lambda_i)
};

struct StageNodeDiagnostics {
  DiskPoint node;
  Complex target;                        // value g_j must take at the node
  double log_abs_target = 0.0;
  double log_abs_product = 0.0;          // log |B_1 ... B_{j-1}(node)|
  std::vector<NearestPairing> pairing;   // one per earlier part
  bool far_pair = false;                 // some nearest distance > 1/2
};

struct StageDiagnostics {
  std::vector<StageNodeDiagnostics> nodes;
  double max_abs_target = 0.0;
};

/// f = g_1 + sum_{j>=2} (B_1 ... B_{j-1}) g_j, with B_i the Blaschke product
/// of part i.
class InterpolantChain {
 public:
  InterpolantChain() = default;
  InterpolantChain(std::vector<std::vector<DiskPoint>> parts, std::vector<BaseInterpolant> stages,
                   HarmonicMajorant local_majorant);

  const std::vector<std::vector<DiskPoint>>& parts() const noexcept { return parts_; }
  const std::vector<FiniteBlaschkeProduct>& blaschke_factors() const noexcept { return products_; }
  const std::vector<BaseInterpolant>& stages() const noexcept { return stages_; }
  /// H_1 with |B_i(z)| >= e^{-H_1(z)} rho(z, Lambda_i) certified at later-stage nodes.
  const HarmonicMajorant& local_majorant() const noexcept { return local_majorant_; }
  const std::vector<StageDiagnostics>& diagnostics() const noexcept { return diagnostics_; }
  void set_diagnostics(std::vector<StageDiagnostics> d) { diagnostics_ = std::move(d); }

  /// f_k(z) for the first k stages (f_1 = g_1).
  Complex evaluate_partial(const DiskPoint& z, std::size_t k) const {
    return evaluate_partial_compensated(z, k).hi();
  }
  CompensatedComplex evaluate_partial_compensated(const DiskPoint& z, std::size_t k) const;
  /// Stage-by-stage Newton evaluation f_n(z).
  Complex evaluate(const DiskPoint& z) const { return evaluate_partial(z, stages_.size()); }
  Complex operator()(const DiskPoint& z) const { return evaluate(z); }
  /// Closed-form sum with each prefix product formed from scratch.
  Complex evaluate_closed_form(const DiskPoint& z) const;

 private:
  std::vector<std::vector<DiskPoint>> parts_;
  std::vector<FiniteBlaschkeProduct> products_;
  std::vector<BaseInterpolant> stages_;
  HarmonicMajorant local_majorant_;
  std::vector<StageDiagnostics> diagnostics_;
};

/// Builds the chain stage by stage: g_1 interpolates omega on part 1, and g_j
/// interpolates (omega - f_{j-1}) / (B_1 ... B_{j-1}) on part j. `omega[j]`
/// holds the values on parts[j]. Parts must be weakly separated under `h`
/// and pairwise disjoint.
/// Throws InvalidInput on shape errors or a node of part j equal to a point
/// of an earlier part, PropertyViolation when a part is not weakly separated.
InterpolantChain chained_solve(const std::vector<std::vector<DiskPoint>>& parts,
                               const std::vector<std::vector<Complex>>& omega,
                               const HarmonicMajorant& h);

struct StageBoundEntry {
  std::size_t stage = 0;  // 1-based j
  std::size_t node = 0;   // index within part j
  double abs_value = 0.0;        // |g_j(node)|
  double log_abs_value = 0.0;
  double log_bound = 0.0;        // 2 j (H + H_1)(node)
  bool flagged = false;          // value exceeds the bound
  bool far_pair = false;         // nearest earlier point beyond rho = 1/2
};

struct StageBoundReport {
  std::vector<StageBoundEntry> entries;
  std::size_t flagged = 0;
  std::size_t far_pairs = 0;
};

/// Compares |g_j| at each node of part j with e^{2j (H + H_1)}.
StageBoundReport stage_bound_report(const InterpolantChain& chain, const HarmonicMajorant& h);

/// max over all nodes of |f(lambda) - omega(lambda)|.
double max_node_residual(const InterpolantChain& chain,
                         const std::vector<std::vector<Complex>>& omega);

}  // namespace nevkit
