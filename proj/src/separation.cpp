#include "nevkit/separation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include "nevkit/divided_differences.hpp"
#include "nevkit/errors.hpp"

namespace nevkit {

SeparationResult weakly_separated(std::span<const DiskPoint> points, const HarmonicMajorant& h) {
  SeparationResult out;
  std::vector<double> radius(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) radius[i] = std::exp(-h.eval(points[i]));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (rho(points[i], points[j]) < radius[i] + radius[j]) {
        out.separated = false;
        out.violation = std::make_pair(i, j);
        return out;
      }
    }
  }
  return out;
}

CountResult count_condition(std::span<const DiskPoint> points, const HarmonicMajorant& h) {
  CountResult out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double r = std::exp(-h.eval(points[i]));
    std::size_t count = 0;
    for (const auto& q : points) {
      if (rho(points[i], q) < r) ++count;
    }
    if (count > out.max_count) {
      out.max_count = count;
      out.witness = i;
    }
  }
  return out;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Level j of the splitting, on the subset `idx`, where every point sees at
// most j subset points within rho < e^{-scale * H}. Returns exactly j parts.
std::vector<std::vector<std::size_t>> split_level(std::span<const DiskPoint> points,
                                                  const std::vector<double>& h_values,
                                                  const std::vector<std::size_t>& idx, int j,
                                                  double scale) {
  if (j == 1) return {idx};
  const double inner_scale = 10.0 * scale;

  // Full clusters at the inner radius, merged by shared members.
  const std::size_t s = idx.size();
  std::vector<std::size_t> parent(s);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> in_a(s, 0);
  for (std::size_t a = 0; a < s; ++a) {
    const double r = std::exp(-inner_scale * h_values[idx[a]]);
    std::vector<std::size_t> members;
    for (std::size_t b = 0; b < s; ++b) {
      if (rho(points[idx[a]], points[idx[b]]) < r) members.push_back(b);
    }
    if (members.size() != static_cast<std::size_t>(j)) continue;
    for (auto b : members) {
      in_a[b] = 1;
      parent[find_root(parent, b)] = find_root(parent, a);
    }
  }

  std::vector<std::size_t> rest;
  std::map<std::size_t, std::vector<std::size_t>> groups;  // keyed by root, members ascending
  for (std::size_t a = 0; a < s; ++a) {
    if (in_a[a]) {
      groups[find_root(parent, a)].push_back(idx[a]);
    } else {
      rest.push_back(idx[a]);
    }
  }

  auto parts = split_level(points, h_values, rest, j - 1, inner_scale);
  parts.emplace_back();

  std::vector<std::vector<std::size_t>> clusters;
  for (auto& [root, members] : groups) {
    if (members.size() != static_cast<std::size_t>(j)) {
      throw std::logic_error("partition: full clusters overlap inconsistently");
    }
    clusters.push_back(members);
  }
  std::sort(clusters.begin(), clusters.end());

  // One point per part, smallest parts first.
  std::vector<std::size_t> order(parts.size());
  for (const auto& cluster : clusters) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return parts[x].size() < parts[y].size();
    });
    for (std::size_t k = 0; k < cluster.size(); ++k) parts[order[k]].push_back(cluster[k]);
  }
  for (auto& p : parts) std::sort(p.begin(), p.end());
  return parts;
}

}  // namespace

PartitionResult partition_weakly_separated(std::span<const DiskPoint> points,
                                           const HarmonicMajorant& h, int n) {
  if (n < 1) throw InvalidInput("partition requires n >= 1");
  const auto count = count_condition(points, h);
  if (count.max_count > static_cast<std::size_t>(n)) {
    throw PropertyViolation("count condition fails: " + std::to_string(count.max_count) +
                                " points in D(lambda, e^{-H(lambda)}) at index " +
                                std::to_string(count.witness) + ", more than n=" +
                                std::to_string(n),
                            {count.witness});
  }
  std::vector<double> h_values(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) h_values[i] = h.eval(points[i]);
  std::vector<std::size_t> all(points.size());
  std::iota(all.begin(), all.end(), 0);

  PartitionResult out{split_level(points, h_values, all, n, 1.0),
                      combine(h, std::pow(10.0, n - 1), std::log(8.0)),
                      {},
                      true};
  for (const auto& part : out.parts) {
    std::vector<DiskPoint> pts;
    for (auto i : part) pts.push_back(points[i]);
    auto check = weakly_separated(pts, out.witness);
    if (check.violation) {
      check.violation = std::make_pair(part[check.violation->first], part[check.violation->second]);
    }
    out.verified = out.verified && check.separated;
    out.part_checks.push_back(check);
  }
  return out;
}

DyadicSquare dyadic_square_of(const DiskPoint& z) {
  const double r = z.abs();
  int k = 0;
  while (k < 60 && r >= 1.0 - std::ldexp(1.0, -(k + 1))) ++k;
  double theta = std::atan2(z.im(), z.re());
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  const double cells = std::ldexp(1.0, k);
  auto j = static_cast<std::int64_t>(std::floor(theta * cells / (2.0 * std::numbers::pi)));
  j = std::clamp<std::int64_t>(j, 0, static_cast<std::int64_t>(cells) - 1);
  return {k, j};
}

bool dyadic_square_contains(const DyadicSquare& q, const DiskPoint& z) {
  const double r = z.abs();
  if (!(r >= 1.0 - std::ldexp(1.0, -q.k) && r < 1.0 - std::ldexp(1.0, -q.k - 1))) return false;
  double theta = std::atan2(z.im(), z.re());
  if (theta < 0.0) theta += 2.0 * std::numbers::pi;
  const double width = 2.0 * std::numbers::pi / std::ldexp(1.0, q.k);
  return theta >= static_cast<double>(q.j) * width &&
         theta < static_cast<double>(q.j + 1) * width;
}

std::vector<std::size_t> nearest_points(std::span<const DiskPoint> points, std::size_t alpha,
                                        std::size_t count) {
  std::vector<std::pair<double, std::size_t>> d;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i != alpha) d.emplace_back(rho(points[alpha], points[i]), i);
  }
  count = std::min(count, d.size());
  std::partial_sort(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(count), d.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(d[i].second);
  return out;
}

std::vector<CriticalRadius> critical_radii(std::span<const DiskPoint> points, int n) {
  if (n < 1) throw InvalidInput("critical_radii requires n >= 1");
  const auto nn = static_cast<std::size_t>(n);
  std::map<DyadicSquare, CriticalRadius> by_square;
  for (std::size_t i = 0; i < points.size(); ++i) {
    double r = std::numeric_limits<double>::infinity();
    if (points.size() > nn) {
      const auto near = nearest_points(points, i, nn);
      r = rho(points[i], points[near.back()]);
    }
    const auto q = dyadic_square_of(points[i]);
    auto [it, inserted] = by_square.try_emplace(q, CriticalRadius{q, r, i});
    if (!inserted && r < it->second.radius) {
      it->second.radius = r;
      it->second.alpha = i;
    }
  }
  std::vector<CriticalRadius> out;
  for (auto& [q, c] : by_square) out.push_back(c);
  return out;
}

Counterexample build_counterexample(std::span<const DiskPoint> points, int n,
                                    const CounterexampleOptions& options) {
  const auto nn = static_cast<std::size_t>(n);
  auto radii = critical_radii(points, n);
  std::vector<CriticalRadius> eligible;
  for (const auto& c : radii) {
    if (std::isfinite(c.radius) && c.radius <= options.max_radius) eligible.push_back(c);
  }
  if (eligible.empty()) {
    throw PropertyViolation("sequence too separated to build counterexample", {});
  }
  std::stable_sort(eligible.begin(), eligible.end(), [](const auto& a, const auto& b) {
    if (a.radius != b.radius) return a.radius < b.radius;
    return a.alpha < b.alpha;
  });

  Counterexample out;
  out.n = n;
  out.values.assign(points.size(), Complex(0.0, 0.0));
  std::vector<const CriticalRadius*> chosen;
  for (const auto& c : eligible) {
    const bool disjoint = std::all_of(chosen.begin(), chosen.end(), [&](const CriticalRadius* o) {
      return rho(points[c.alpha], points[o->alpha]) >= c.radius + o->radius;
    });
    if (disjoint) chosen.push_back(&c);
  }

  for (const auto* c : chosen) {
    CounterexampleEntry e;
    e.alpha = c->alpha;
    e.square = c->square;
    e.radius = c->radius;
    e.nearest = nearest_points(points, c->alpha, nn);
    Complex w(1.0, 0.0);
    for (std::size_t j = 0; j + 1 < nn; ++j) {
      w *= blaschke_factor(points[c->alpha], points[e.nearest[j]]);
    }
    out.values[c->alpha] = w;
    e.blowup_target = 1.0 / c->radius;
    out.selected.push_back(c->alpha);
    out.entries.push_back(std::move(e));
  }

  // Identity checks need the final omega, so they run after all values are set.
  for (auto& e : out.entries) {
    std::vector<DiskPoint> tuple;
    std::vector<Complex> vals;
    for (auto i : e.nearest) {
      tuple.push_back(points[i]);
      vals.push_back(out.values[i]);
    }
    tuple.push_back(points[e.alpha]);
    vals.push_back(out.values[e.alpha]);
    e.order_n = std::exp(divided_difference_scaled(tuple, vals).log_abs());
    tuple.erase(tuple.begin() + static_cast<std::ptrdiff_t>(nn) - 1);
    vals.erase(vals.begin() + static_cast<std::ptrdiff_t>(nn) - 1);
    e.order_n_minus_1 = std::exp(divided_difference_scaled(tuple, vals).log_abs());
  }
  return out;
}

}  // namespace nevkit
