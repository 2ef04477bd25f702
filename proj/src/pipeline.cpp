#include "nevkit/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "nevkit/blaschke.hpp"
#include "nevkit/covering.hpp"
#include "nevkit/divided_differences.hpp"
#include "nevkit/errors.hpp"
#include "nevkit/interpolator.hpp"
#include "nevkit/random.hpp"
#include "nevkit/separation.hpp"

namespace nevkit {

namespace {

Json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

Json stat_summary(const DividedDifferenceStat& s) {
  Json w = Json::array();
  for (auto i : s.witness) w.push_back(i);
  return Json{{"order", s.order},
              {"sup", number(s.sup_value)},
              {"log_sup", s.log_sup == -INFINITY ? Json("-inf") : number(s.log_sup)},
              {"witness_indices", w},
              {"tuples", s.tuples},
              {"finite", std::isfinite(s.sup_value)}};
}

Json failed_step(const PropertyViolation& e) {
  Json w = Json::array();
  for (auto i : e.witness()) w.push_back(i);
  return Json{{"passed", false}, {"error", e.what()}, {"witness", w}};
}

template <class F>
auto with_step(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const BudgetExceeded& e) {
    throw BudgetExceeded(std::string(name) + ": " + e.what());
  } catch (const InvalidInput& e) {
    throw InvalidInput(std::string(name) + ": " + e.what());
  }
}

std::vector<std::vector<DiskPoint>> gather(const LabeledSequence& seq,
                                           const std::vector<std::vector<std::size_t>>& parts) {
  std::vector<std::vector<DiskPoint>> out;
  for (const auto& p : parts) {
    auto& dst = out.emplace_back();
    for (auto i : p) dst.push_back(seq.points()[i]);
  }
  return out;
}

}  // namespace

Json verify_main_theorem(const LabeledSequence& seq, const HarmonicMajorant& h,
                         const MainTheoremOptions& options) {
  if (options.n < 1) throw InvalidInput("verify-main: n must be >= 1");
  if (seq.size() == 0) throw InvalidInput("verify-main: empty sequence");
  const int n = options.n;
  const auto& points = seq.points();
  XnOptions xo;
  xo.budget = options.budget;
  xo.threads = options.threads;
  xo.max_n = std::max(4, n + 1);

  Json report{{"n", n},
              {"size", seq.size()},
              {"majorant", to_json(h)},
              {"seed", options.seed},
              {"budget", options.budget}};
  Json steps = Json::object();
  bool forward_ok = true;

  // Random targets in the square [-1, 1]^2, fixed by the seed.
  Rng rng(options.seed);
  std::vector<Complex> omega(seq.size());
  for (auto& w : omega) w = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  double max_omega = 0.0;
  for (const auto& w : omega) max_omega = std::max(max_omega, std::abs(w));

  // partition
  std::optional<PartitionResult> partition;
  {
    const auto count = count_condition(points, h);
    Json step{{"count", count.max_count}, {"count_witness", count.witness}};
    try {
      partition = with_step("partition", [&] { return partition_weakly_separated(points, h, n); });
      bool disjoint_cover = true;
      std::vector<int> seen(seq.size(), 0);
      for (const auto& p : partition->parts) {
        for (auto i : p) ++seen[i];
      }
      for (int s : seen) disjoint_cover = disjoint_cover && s == 1;
      step["passed"] = partition->verified && disjoint_cover;
      Json parts = Json::array();
      for (const auto& p : partition->parts) parts.push_back(p);
      step["parts"] = parts;
      step["witness_majorant"] = to_json(partition->witness);
    } catch (const PropertyViolation& e) {
      Json f = failed_step(e);
      step.update(f);
    }
    forward_ok = step["passed"].get<bool>();
    steps["partition"] = step;
  }

  std::vector<std::vector<DiskPoint>> parts;
  std::vector<std::vector<Complex>> omega_parts;
  if (forward_ok) {
    parts = gather(seq, partition->parts);
    for (const auto& p : partition->parts) {
      auto& dst = omega_parts.emplace_back();
      for (auto i : p) dst.push_back(omega[i]);
    }
  }

  // margins
  if (forward_ok) {
    Json step{{"passed", true}};
    Json per_part = Json::array();
    const auto grid = MajorantGrid::standard();
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const auto& part = parts[j];
      auto found = with_step("margins", [&] {
        return search_majorant(grid, [&](const HarmonicMajorant& cand) {
          for (std::size_t i = 0; i < part.size(); ++i) {
            if (!interpolation_margin(part, i, cand).satisfied) return false;
          }
          return true;
        });
      });
      double min_log_margin = INFINITY;
      for (std::size_t i = 0; i < part.size(); ++i) {
        min_log_margin = std::min(min_log_margin, interpolation_margin(part, i, h).log_margin);
      }
      Json e{{"part", j + 1}, {"min_log_margin", number(min_log_margin)}};
      if (found) {
        e["majorant"] = to_json(*found);
      } else {
        e["majorant"] = "no witness found";
        step["passed"] = false;
      }
      per_part.push_back(e);
    }
    step["parts"] = per_part;
    forward_ok = step["passed"].get<bool>();
    steps["margins"] = step;
  } else {
    steps["margins"] = Json{{"passed", nullptr}, {"skipped", true}};
  }

  // covering
  std::optional<Covering> covering;
  if (forward_ok) {
    Json step;
    try {
      const auto h0 = fit_separation_majorant(parts);
      covering = with_step("covering", [&] { return build_covering(parts, h0); });
      const auto rep = verify_covering(*covering, parts);
      step["passed"] = rep.all_passed() && covering->alpha == covering->start_constant - (n - 1) &&
                       covering->beta == covering->start_constant + (n - 1);
      step["majorant"] = to_json(h0);
      step["start_constant"] = covering->start_constant;
      step["alpha"] = covering->alpha;
      step["beta"] = covering->beta;
      step["disks"] = covering->centers.size();
      step["checks"] = to_json(rep);
    } catch (const PropertyViolation& e) {
      step = failed_step(e);
    }
    forward_ok = step["passed"].get<bool>();
    steps["covering"] = step;
  } else {
    steps["covering"] = Json{{"passed", nullptr}, {"skipped", true}};
  }

  // extension
  if (forward_ok) {
    Json step{{"passed", true}};
    Json per_part = Json::array();
    std::vector<DiskPoint> all;
    for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    const HarmonicMajorant& h0 = covering->majorant;
    try {
      for (std::size_t j = 0; j < parts.size(); ++j) {
        const auto ext = with_step("extension", [&] {
          return extend_values(*covering, parts, j, omega_parts[j]);
        });
        std::size_t base = 0;
        for (std::size_t q = 0; q < j; ++q) base += parts[q].size();
        bool identity = true;
        for (std::size_t a = 0; a < parts[j].size(); ++a) identity = identity && ext[base + a] == omega_parts[j][a];
        const LabeledSequence extended(all, std::nullopt, ext);
        Json stats = Json::array();
        bool finite = true;
        HarmonicMajorant ht(kLog3);
        for (int k = 1; k <= n; ++k) {
          const std::array<HarmonicMajorant, 2> terms{ht, h0};
          const std::array<double, 2> scales{1.0, covering->beta};
          ht = combine(terms, scales, std::log(2.0));
          const auto s = with_step("extension", [&] { return xn_statistic(extended, k, ht, xo); });
          finite = finite && std::isfinite(s.sup_value);
          Json sj = stat_summary(s);
          sj["majorant_constant"] = ht.constant();
          stats.push_back(sj);
        }
        if (!identity || !finite) step["passed"] = false;
        per_part.push_back(Json{{"part", j + 1}, {"restriction_identity", identity}, {"statistics", stats}});
      }
      step["parts"] = per_part;
    } catch (const PropertyViolation& e) {
      step = failed_step(e);
    }
    forward_ok = step["passed"].get<bool>();
    steps["extension"] = step;
  } else {
    steps["extension"] = Json{{"passed", nullptr}, {"skipped", true}};
  }

  // interpolation
  if (forward_ok) {
    Json step;
    try {
      const LabeledSequence valued = seq.with_values(omega);
      const auto stat = with_step("interpolation", [&] { return xn_statistic(valued, n, h, xo); });
      const auto chain = with_step("interpolation", [&] {
        return chained_solve(parts, omega_parts, partition->witness);
      });
      const double residual = max_node_residual(chain, omega_parts);
      const double tol = 1e-9 * (1.0 + max_omega);
      const auto bounds = stage_bound_report(chain, partition->witness);
      step["passed"] = std::isfinite(stat.sup_value) && residual <= tol;
      step["target_statistic"] = stat_summary(stat);
      step["max_abs_target"] = max_omega;
      step["residual"] = residual;
      step["tolerance"] = tol;
      step["local_majorant"] = to_json(chain.local_majorant());
      step["stage_bounds"] = Json{{"entries", bounds.entries.size()},
                                  {"flagged", bounds.flagged},
                                  {"far_pairs", bounds.far_pairs}};
    } catch (const PropertyViolation& e) {
      step = failed_step(e);
    }
    forward_ok = step["passed"].get<bool>();
    steps["interpolation"] = step;
  } else {
    steps["interpolation"] = Json{{"passed", nullptr}, {"skipped", true}};
  }

  // counterexample
  bool converse_ok = true;
  {
    Json step;
    try {
      const auto ce = with_step("counterexample", [&] { return build_counterexample(points, n); });
      double max_identity_error = 0.0;
      double blowup = 0.0;
      double max_order_n = 0.0;
      for (const auto& e : ce.entries) {
        max_identity_error = std::max(max_identity_error, std::abs(e.order_n_minus_1 - 1.0));
        max_identity_error =
            std::max(max_identity_error, std::abs(e.order_n - e.blowup_target) / e.blowup_target);
        blowup = std::max(blowup, e.blowup_target);
        max_order_n = std::max(max_order_n, e.order_n);
      }
      const LabeledSequence valued = seq.with_values(ce.values);
      const auto stat = with_step("counterexample", [&] { return xn_statistic(valued, n, h, xo); });
      const bool identities = max_identity_error <= 1e-9;
      const bool bounded = stat.sup_value <= 1.0;
      const bool blowup_ok = std::abs(max_order_n - blowup) <= 1e-9 * blowup;
      step["passed"] = identities && bounded && blowup_ok;
      step["selected"] = ce.selected.size();
      step["max_identity_error"] = max_identity_error;
      step["order_n_minus_1_statistic"] = stat_summary(stat);
      step["blowup"] = number(blowup);
      step["max_order_n"] = number(max_order_n);
    } catch (const PropertyViolation& e) {
      step = failed_step(e);
    }
    converse_ok = step["passed"].get<bool>();
    steps["counterexample"] = step;
  }

  report["steps"] = steps;
  report["forward"] = forward_ok;
  report["converse"] = converse_ok;
  report["passed"] = forward_ok && converse_ok;
  return report;
}

bool report_passed(const Json& report) {
  return report.contains("passed") && report.at("passed").is_boolean() && report.at("passed").get<bool>();
}

}  // namespace nevkit
