#include "nevkit/interpolator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nevkit/errors.hpp"
#include "nevkit/scaled_complex.hpp"
#include "nevkit/separation.hpp"

namespace nevkit {

namespace {

bool is_finite(const Complex& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// f_k(z) = g_1 + sum_j (B_1 ... B_{j-1}) g_j, accumulated in double-double.
CompensatedComplex chain_sum(const std::vector<BaseInterpolant>& stages,
                             const std::vector<FiniteBlaschkeProduct>& products, const DiskPoint& z,
                             std::size_t k) {
  CompensatedComplex f;
  if (k == 0) return f;
  f = stages[0].evaluate_compensated(z);
  Complex prefix(1.0, 0.0);
  for (std::size_t j = 1; j < k; ++j) {
    prefix *= products[j - 1].evaluate(z);
    f = f + stages[j].evaluate_compensated(z) * prefix;
  }
  return f;
}

// prod_{i != k} b_{nodes[i]}(z) for every k, via prefix and suffix products.
std::vector<Complex> deflated_products(const std::vector<DiskPoint>& nodes, const DiskPoint& z) {
  const std::size_t m = nodes.size();
  std::vector<Complex> factor(m), out(m);
  for (std::size_t i = 0; i < m; ++i) factor[i] = blaschke_factor(nodes[i], z);
  Complex prefix(1.0, 0.0);
  for (std::size_t k = 0; k < m; ++k) {
    out[k] = prefix;
    prefix *= factor[k];
  }
  Complex suffix(1.0, 0.0);
  for (std::size_t k = m; k-- > 0;) {
    out[k] *= suffix;
    suffix *= factor[k];
  }
  return out;
}

}  // namespace

BaseInterpolant::BaseInterpolant(std::vector<DiskPoint> nodes, std::vector<Complex> values,
                                 std::vector<Complex> values_lo)
    : nodes_(std::move(nodes)), values_(std::move(values)), values_lo_(std::move(values_lo)) {
  if (nodes_.size() != values_.size()) throw InvalidInput("base_interpolate: one value per node");
  if (values_lo_.empty()) values_lo_.assign(values_.size(), Complex(0.0, 0.0));
  if (values_lo_.size() != values_.size()) throw InvalidInput("base_interpolate: one low-order part per value");
  for (std::size_t a = 0; a < nodes_.size(); ++a) {
    if (!is_finite(values_[a]) || !is_finite(values_lo_[a])) {
      throw InvalidInput("base_interpolate: values must be finite");
    }
    for (std::size_t b = a + 1; b < nodes_.size(); ++b) {
      if (nodes_[a] == nodes_[b]) throw InvalidInput("base_interpolate: duplicate nodes");
    }
  }
  coeffs_.resize(nodes_.size());
  margins_.resize(nodes_.size());
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const Complex bk = deflated_products(nodes_, nodes_[k])[k];
    margins_[k] = std::abs(bk);
    if (margins_[k] == 0.0) throw InvalidInput("base_interpolate: nodes too close to separate");
    coeffs_[k] = CompensatedComplex(values_[k], values_lo_[k]) / bk;
    growth_ = std::max(growth_, std::abs(values_[k]) / margins_[k]);
  }
}

CompensatedComplex BaseInterpolant::evaluate_compensated(const DiskPoint& z) const {
  const auto bk = deflated_products(nodes_, z);
  CompensatedComplex sum;
  for (std::size_t k = 0; k < nodes_.size(); ++k) sum = sum + coeffs_[k] * bk[k];
  return sum;
}

BaseInterpolant base_interpolate(std::vector<DiskPoint> nodes, std::vector<Complex> values) {
  return BaseInterpolant(std::move(nodes), std::move(values));
}

BaseInterpolant base_interpolate_compensated(std::vector<DiskPoint> nodes,
                                            const std::vector<CompensatedComplex>& values) {
  std::vector<Complex> hi, lo;
  for (const auto& v : values) {
    hi.push_back(v.hi());
    lo.push_back(v.lo());
  }
  return BaseInterpolant(std::move(nodes), std::move(hi), std::move(lo));
}

InterpolantChain::InterpolantChain(std::vector<std::vector<DiskPoint>> parts,
                                   std::vector<BaseInterpolant> stages,
                                   HarmonicMajorant local_majorant)
    : parts_(std::move(parts)), stages_(std::move(stages)), local_majorant_(std::move(local_majorant)) {
  if (parts_.size() != stages_.size()) throw InvalidInput("chain: one stage per part");
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) products_.emplace_back(parts_[i]);
}

CompensatedComplex InterpolantChain::evaluate_partial_compensated(const DiskPoint& z, std::size_t k) const {
  return chain_sum(stages_, products_, z, std::min(k, stages_.size()));
}

Complex InterpolantChain::evaluate_closed_form(const DiskPoint& z) const {
  CompensatedComplex f;
  for (std::size_t j = 0; j < stages_.size(); ++j) {
    const FiniteBlaschkeProduct prefix =
        multiply(std::span<const FiniteBlaschkeProduct>(products_.data(), j));
    f = f + stages_[j].evaluate_compensated(z) * prefix.evaluate(z);
  }
  return f.hi();
}

InterpolantChain chained_solve(const std::vector<std::vector<DiskPoint>>& parts,
                               const std::vector<std::vector<Complex>>& omega,
                               const HarmonicMajorant& h) {
  if (parts.empty()) throw InvalidInput("chained_solve: no parts");
  if (omega.size() != parts.size()) throw InvalidInput("chained_solve: omega must cover every part");
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (omega[j].size() != parts[j].size()) {
      throw InvalidInput("chained_solve: omega missing on part " + std::to_string(j + 1));
    }
    for (std::size_t i = 0; i < j; ++i) {
      for (const auto& p : parts[j]) {
        if (std::find(parts[i].begin(), parts[i].end(), p) != parts[i].end()) {
          throw InvalidInput("chained_solve: a node of part " + std::to_string(j + 1) +
                             " lies on the zero set of part " + std::to_string(i + 1));
        }
      }
    }
    const auto sep = weakly_separated(parts[j], h);
    if (!sep.separated) {
      throw PropertyViolation("chained_solve: part " + std::to_string(j + 1) +
                                  " is not weakly separated",
                              {sep.violation->first, sep.violation->second});
    }
  }

  // H_1 for every earlier product, fitted and certified at later-stage nodes.
  double h1_constant = kLog3;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    std::vector<DiskPoint> later;
    for (std::size_t j = i + 1; j < parts.size(); ++j) later.insert(later.end(), parts[j].begin(), parts[j].end());
    h1_constant = std::max(h1_constant, fit_local_lower_bound(parts[i], later).constant());
  }
  const HarmonicMajorant h1(h1_constant);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    std::vector<DiskPoint> later;
    for (std::size_t j = i + 1; j < parts.size(); ++j) later.insert(later.end(), parts[j].begin(), parts[j].end());
    if (!local_lower_bound_check(parts[i], h1, later).all_hold) {
      throw std::logic_error("chained_solve: fitted local lower bound failed certification");
    }
  }

  std::vector<BaseInterpolant> stages;
  std::vector<FiniteBlaschkeProduct> products;
  std::vector<StageDiagnostics> diagnostics;
  const double log_tiny = std::log(kTinyDivisor);

  for (std::size_t j = 0; j < parts.size(); ++j) {
    StageDiagnostics diag;
    std::vector<CompensatedComplex> targets(parts[j].size());
    for (std::size_t k = 0; k < parts[j].size(); ++k) {
      const DiskPoint& node = parts[j][k];
      StageNodeDiagnostics nd{node, {}, 0.0, 0.0, {}, false};
      const CompensatedComplex f_prev = chain_sum(stages, products, node, stages.size());
      const CompensatedComplex num =
          CompensatedComplex(omega[j][k]) + CompensatedComplex(dd::neg(f_prev.re), dd::neg(f_prev.im));
      double log_p = 0.0;
      double arg_p = 0.0;
      Complex p_linear(1.0, 0.0);
      for (const auto& b : products) {
        log_p += b.log_modulus(node);
        arg_p += b.argument(node);
        p_linear *= b.evaluate(node);
      }
      CompensatedComplex exact_target;
      if (log_p >= log_tiny) {
        exact_target = num / p_linear;
      } else {
        exact_target = num * std::polar(std::exp(-log_p), -arg_p);
      }
      targets[k] = exact_target;
      const Complex target = exact_target.hi();
      nd.target = target;
      nd.log_abs_target = target == Complex(0.0, 0.0) ? -INFINITY : std::log(std::abs(target));
      nd.log_abs_product = log_p;
      for (std::size_t i = 0; i < j; ++i) {
        NearestPairing best{i, 0, 2.0};
        for (std::size_t q = 0; q < parts[i].size(); ++q) {
          const double d = rho(node, parts[i][q]);
          if (d < best.distance) best = {i, q, d};
        }
        if (!parts[i].empty()) {
          nd.far_pair = nd.far_pair || best.distance > 0.5;
          nd.pairing.push_back(best);
        }
      }
      diag.max_abs_target = std::max(diag.max_abs_target, std::abs(target));
      diag.nodes.push_back(std::move(nd));
    }
    stages.push_back(base_interpolate_compensated(parts[j], targets));
    if (j + 1 < parts.size()) products.emplace_back(parts[j]);
    diagnostics.push_back(std::move(diag));
  }

  InterpolantChain chain(parts, std::move(stages), h1);
  chain.set_diagnostics(std::move(diagnostics));
  return chain;
}

StageBoundReport stage_bound_report(const InterpolantChain& chain, const HarmonicMajorant& h) {
  StageBoundReport rep;
  const auto& h1 = chain.local_majorant();
  for (std::size_t j = 0; j < chain.stages().size(); ++j) {
    const auto& stage = chain.stages()[j];
    for (std::size_t k = 0; k < stage.nodes().size(); ++k) {
      const DiskPoint& node = stage.nodes()[k];
      StageBoundEntry e;
      e.stage = j + 1;
      e.node = k;
      e.abs_value = std::abs(stage.values()[k]);
      e.log_abs_value = e.abs_value == 0.0 ? -INFINITY : std::log(e.abs_value);
      e.log_bound = 2.0 * static_cast<double>(j + 1) * (h.eval(node) + h1.eval(node));
      e.flagged = e.log_abs_value > e.log_bound;
      if (j < chain.diagnostics().size() && k < chain.diagnostics()[j].nodes.size()) {
        e.far_pair = chain.diagnostics()[j].nodes[k].far_pair;
      }
      rep.flagged += e.flagged ? 1 : 0;
      rep.far_pairs += e.far_pair ? 1 : 0;
      rep.entries.push_back(e);
    }
  }
  return rep;
}

double max_node_residual(const InterpolantChain& chain,
                         const std::vector<std::vector<Complex>>& omega) {
  double worst = 0.0;
  const auto& parts = chain.parts();
  for (std::size_t j = 0; j < parts.size() && j < omega.size(); ++j) {
    for (std::size_t k = 0; k < parts[j].size(); ++k) {
      worst = std::max(worst, std::abs(chain(parts[j][k]) - omega[j][k]));
    }
  }
  return worst;
}

}  // namespace nevkit
