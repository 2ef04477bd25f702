#include "nevkit/covering.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nevkit/errors.hpp"

namespace nevkit {

namespace {

std::vector<DiskPoint> flatten(const std::vector<std::vector<DiskPoint>>& parts,
                               std::vector<int>* labels = nullptr) {
  std::vector<DiskPoint> all;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    for (const auto& p : parts[j]) {
      all.push_back(p);
      if (labels) labels->push_back(static_cast<int>(j) + 1);
    }
  }
  return all;
}

}  // namespace

Covering build_covering(const std::vector<std::vector<DiskPoint>>& parts, const HarmonicMajorant& h,
                        const CoveringOptions& options) {
  const auto n = static_cast<double>(parts.size());
  if (parts.empty()) throw InvalidInput("build_covering needs at least one part");
  const double c = options.start_constant.value_or(std::max(n + 1.0, 4.0));
  if (!(c > n) || c < 4.0) throw InvalidInput("covering constant C must satisfy C > n and C >= 4");

  std::vector<int> labels;
  const auto all = flatten(parts, &labels);
  {
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InvalidInput("build_covering: parts share a point");
    }
  }
  std::vector<double> hv(all.size());
  const double log8 = std::log(8.0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    hv[i] = h.eval(all[i]);
    if (hv[i] < log8) {
      throw PropertyViolation("majorant below log 8 at point " + std::to_string(i), {i});
    }
  }

  // Separation hypothesis within each part.
  std::vector<std::size_t> offset(parts.size() + 1, 0);
  for (std::size_t j = 0; j < parts.size(); ++j) offset[j + 1] = offset[j] + parts[j].size();
  for (std::size_t j = 0; j < parts.size(); ++j) {
    for (std::size_t a = offset[j]; a < offset[j + 1]; ++a) {
      for (std::size_t b = offset[j]; b < offset[j + 1]; ++b) {
        if (a != b && rho(all[a], all[b]) < std::exp(-hv[a])) {
          throw PropertyViolation("part " + std::to_string(j + 1) + " is not separated: points " +
                                      std::to_string(std::min(a, b)) + " and " +
                                      std::to_string(std::max(a, b)),
                                  {std::min(a, b), std::max(a, b)});
        }
      }
    }
  }

  Covering cov;
  cov.majorant = h;
  cov.start_constant = c;
  std::vector<std::size_t> center_point;  // center -> point index
  std::vector<double> center_h;
  for (std::size_t a = offset[0]; a < offset[1]; ++a) {
    center_point.push_back(a);
    center_h.push_back(hv[a]);
    cov.centers.push_back(all[a]);
    cov.radii.push_back(std::exp(-c * hv[a]));
    cov.center_part.push_back(1);
  }

  double alpha = c;
  double beta = c;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const std::size_t existing = cov.centers.size();
    std::vector<double> enlarged(existing);
    for (std::size_t t = 0; t < existing; ++t) {
      enlarged[t] = cov.radii[t] + 0.25 * std::exp(-beta * center_h[t]);
    }
    std::vector<char> meets(existing, 0);  // M1 membership
    std::vector<std::size_t> fresh;        // N2
    for (std::size_t a = offset[k]; a < offset[k + 1]; ++a) {
      bool absorbed = false;
      for (std::size_t t = 0; t < existing; ++t) {
        if (rho(cov.centers[t], all[a]) < enlarged[t]) {
          meets[t] = 1;
          absorbed = true;
        }
      }
      if (!absorbed) fresh.push_back(a);
    }
    for (std::size_t t = 0; t < existing; ++t) {
      if (meets[t]) cov.radii[t] = enlarged[t];
    }
    for (auto a : fresh) {
      center_point.push_back(a);
      center_h.push_back(hv[a]);
      cov.centers.push_back(all[a]);
      cov.radii.push_back(0.125 * std::exp(-beta * hv[a]));
      cov.center_part.push_back(static_cast<int>(k) + 1);
    }
    alpha -= 1.0;
    beta += 1.0;
  }
  cov.alpha = alpha;
  cov.beta = beta;

  cov.assignment.assign(all.size(), cov.centers.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t t = 0; t < cov.centers.size(); ++t) {
      if (rho(cov.centers[t], all[i]) < cov.radii[t]) {
        cov.assignment[i] = t;
        break;
      }
    }
  }
  return cov;
}

CoveringReport verify_covering(const Covering& cov,
                               const std::vector<std::vector<DiskPoint>>& parts) {
  CoveringReport rep;
  std::vector<int> labels;
  const auto all = flatten(parts, &labels);
  const auto& h = cov.majorant;
  const std::size_t nc = cov.centers.size();

  auto fail = [](CoveringCheck& c, std::string detail, std::vector<std::size_t> witness) {
    if (!c.passed) return;
    c.passed = false;
    c.detail = std::move(detail);
    c.witness = std::move(witness);
  };

  if (cov.radii.size() != nc) {
    fail(rep.radii_bounds, "radius list does not match centers", {});
    return rep;
  }

  for (std::size_t i = 0; i < all.size(); ++i) {
    bool inside = false;
    for (std::size_t t = 0; t < nc && !inside; ++t) inside = rho(cov.centers[t], all[i]) < cov.radii[t];
    if (!inside) fail(rep.covers, "point " + std::to_string(i) + " lies in no disk", {i});
  }

  std::vector<double> hc(nc);
  for (std::size_t t = 0; t < nc; ++t) {
    hc[t] = h.eval(cov.centers[t]);
    const double lo = std::exp(-cov.beta * hc[t]);
    const double hi = std::exp(-cov.alpha * hc[t]);
    const double r = cov.radii[t];
    if (!(r >= lo * (1.0 - kCoveringRelTol) && r <= hi * (1.0 + kCoveringRelTol))) {
      fail(rep.radii_bounds, "radius of center " + std::to_string(t) + " outside bounds", {t});
    }
  }

  for (std::size_t s = 0; s < nc; ++s) {
    for (std::size_t t = s + 1; t < nc; ++t) {
      const double gap = rho(cov.centers[s], cov.centers[t]) - cov.radii[s] - cov.radii[t];
      const double need = std::max(std::exp(-cov.beta * hc[s]), std::exp(-cov.beta * hc[t]));
      if (!(gap >= need * (1.0 - kCoveringRelTol))) {
        fail(rep.gaps,
             "disks " + std::to_string(s) + " and " + std::to_string(t) + " are too close",
             {s, t});
      }
    }
  }

  for (std::size_t t = 0; t < nc; ++t) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      std::vector<std::size_t> hits;
      std::size_t base = 0;
      for (std::size_t q = 0; q < j; ++q) base += parts[q].size();
      for (std::size_t a = 0; a < parts[j].size(); ++a) {
        if (rho(cov.centers[t], parts[j][a]) < cov.radii[t]) hits.push_back(base + a);
      }
      if (hits.size() > 1) {
        fail(rep.one_per_part,
             "disk " + std::to_string(t) + " holds two points of part " + std::to_string(j + 1),
             {t, hits[0], hits[1]});
      }
    }
  }
  return rep;
}

std::vector<Complex> extend_values(const Covering& cov,
                                   const std::vector<std::vector<DiskPoint>>& parts, std::size_t j,
                                   const std::vector<Complex>& omega_j) {
  if (j >= parts.size()) throw InvalidInput("extend_values: part index out of range");
  if (omega_j.size() != parts[j].size()) throw InvalidInput("extend_values: values must cover part");
  std::size_t base = 0;
  for (std::size_t q = 0; q < j; ++q) base += parts[q].size();
  std::size_t total = base;
  for (std::size_t q = j; q < parts.size(); ++q) total += parts[q].size();
  if (cov.assignment.size() != total) throw InvalidInput("extend_values: covering does not match parts");

  const std::size_t nc = cov.centers.size();
  std::vector<std::optional<std::size_t>> owner(nc);  // part-j point in each disk
  for (std::size_t a = 0; a < parts[j].size(); ++a) {
    const std::size_t t = cov.assignment[base + a];
    if (t >= nc) throw PropertyViolation("extend_values: point outside the covering", {base + a});
    if (owner[t]) {
      throw PropertyViolation("extend_values: disk " + std::to_string(t) + " holds two points of part " +
                                  std::to_string(j + 1),
                              {base + *owner[t], base + a});
    }
    owner[t] = a;
  }
  std::vector<Complex> out(total, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < total; ++i) {
    const std::size_t t = cov.assignment[i];
    if (t >= nc) throw PropertyViolation("extend_values: point outside the covering", {i});
    if (owner[t]) out[i] = omega_j[*owner[t]];
  }
  return out;
}

HarmonicMajorant fit_separation_majorant(const std::vector<std::vector<DiskPoint>>& parts,
                                         double slack) {
  double c = std::log(8.0);
  for (const auto& part : parts) {
    for (std::size_t a = 0; a < part.size(); ++a) {
      for (std::size_t b = a + 1; b < part.size(); ++b) {
        const double r = rho(part[a], part[b]);
        if (r == 0.0) throw InvalidInput("fit_separation_majorant: repeated point");
        c = std::max(c, -std::log(r));
      }
    }
  }
  return HarmonicMajorant(c + slack);
}

}  // namespace nevkit
