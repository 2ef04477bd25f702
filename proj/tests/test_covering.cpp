#include <cmath>
#include <vector>

#include "doctest.h"
#include "gen.hpp"
#include "nevkit/covering.hpp"
#include "nevkit/divided_differences.hpp"
#include "nevkit/errors.hpp"

using namespace nevkit;
using doctest::Approx;

using Parts = std::vector<std::vector<DiskPoint>>;

TEST_CASE("covering base case") {
  Parts parts{{DiskPoint(0, 0)}};
  const HarmonicMajorant h(std::log(8.0));
  auto cov = build_covering(parts, h);
  REQUIRE(cov.centers.size() == 1);
  CHECK(cov.start_constant == 4.0);
  CHECK(cov.radii[0] == Approx(std::pow(8.0, -4.0)));
  CHECK(cov.alpha == 4.0);
  CHECK(cov.beta == 4.0);
  CoveringOptions opts;
  opts.start_constant = 6.0;
  CHECK(build_covering(parts, h, opts).radii[0] == Approx(std::pow(8.0, -6.0)));
}

TEST_CASE("covering: a far point becomes a new center") {
  const HarmonicMajorant h(std::log(8.0));
  Parts parts{{DiskPoint(0, 0)}, {DiskPoint(0.9, 0)}};
  auto cov = build_covering(parts, h);
  REQUIRE(cov.centers.size() == 2);
  CHECK(cov.center_part[1] == 2);
  // beta_1 = C = 4 at the time of the step.
  CHECK(cov.radii[1] == Approx(std::pow(8.0, -4.0) / 8.0));
  CHECK(cov.alpha == 3.0);
  CHECK(cov.beta == 5.0);
  CHECK(verify_covering(cov, parts).all_passed());
}

TEST_CASE("covering: a near point is absorbed") {
  const HarmonicMajorant h(std::log(8.0));
  const double r1 = std::pow(8.0, -4.0);
  const double grow = r1 / 4.0;
  // Inside the enlarged disk, outside the original one.
  const double x = (r1 + 0.5 * grow);
  Parts parts{{DiskPoint(0, 0)}, {DiskPoint(x, 0)}};
  auto cov = build_covering(parts, h);
  REQUIRE(cov.centers.size() == 1);
  CHECK(cov.radii[0] == Approx(r1 + grow));
  CHECK(cov.assignment == std::vector<std::size_t>{0, 0});
  CHECK(verify_covering(cov, parts).all_passed());
}

TEST_CASE("covering preconditions") {
  const HarmonicMajorant h(std::log(8.0));
  Parts close{{DiskPoint(0, 0), DiskPoint(1e-3, 0)}};
  CHECK_THROWS_AS(build_covering(close, h), PropertyViolation);
  Parts ok{{DiskPoint(0, 0)}};
  CHECK_THROWS_AS(build_covering(ok, HarmonicMajorant(2.0)), PropertyViolation);
  Parts shared{{DiskPoint(0, 0)}, {DiskPoint(0, 0)}};
  CHECK_THROWS_AS(build_covering(shared, h), InvalidInput);
  CoveringOptions low;
  low.start_constant = 3.0;
  CHECK_THROWS_AS(build_covering(ok, h, low), InvalidInput);
  CoveringOptions not_above_n;
  not_above_n.start_constant = 4.0;
  Parts five(5, std::vector<DiskPoint>{});
  for (int i = 0; i < 5; ++i) five[static_cast<std::size_t>(i)].push_back(DiskPoint(0.1 * i, 0.5));
  CHECK_THROWS_AS(build_covering(five, h, not_above_n), InvalidInput);
}

TEST_CASE("verifier catches constructed violations") {
  const HarmonicMajorant h(std::log(8.0));
  Parts parts{{DiskPoint(0, 0), DiskPoint(0.5, 0)}};
  Covering cov;
  cov.majorant = h;
  cov.alpha = 1.0;
  cov.beta = 3.0;
  cov.start_constant = 4.0;
  cov.centers = {DiskPoint(0, 0), DiskPoint(0.1, 0)};
  cov.radii = {0.06, 0.06};
  cov.assignment = {0, 1};
  auto rep = verify_covering(cov, parts);
  CHECK_FALSE(rep.gaps.passed);
  CHECK(rep.gaps.witness == std::vector<std::size_t>{0, 1});
  CHECK_FALSE(rep.covers.passed);
  CHECK(rep.covers.witness == std::vector<std::size_t>{1});

  Covering two;
  two.majorant = h;
  two.alpha = 0.1;
  two.beta = 3.0;
  two.centers = {DiskPoint(0, 0)};
  two.radii = {0.6};
  two.assignment = {0, 0};
  auto r2 = verify_covering(two, parts);
  CHECK_FALSE(r2.one_per_part.passed);
  CHECK(r2.one_per_part.witness == std::vector<std::size_t>{0, 0, 1});
  CHECK_THROWS_AS(extend_values(two, parts, 0, {Complex(1, 0), Complex(2, 0)}), PropertyViolation);

  Covering wide = two;
  wide.alpha = 1.0;
  CHECK_FALSE(verify_covering(wide, parts).radii_bounds.passed);
}

TEST_CASE("property: coverings of random separated unions verify") {
  gen::Source src(61);
  for (int t = 0; t < 60; ++t) {
    const int n = src.integer(1, 3);
    auto parts = src.separated_union(n, src.integer(1, 20), src.range(0.05, 0.4));
    const auto h = fit_separation_majorant(parts);
    const auto cov = build_covering(parts, h);
    REQUIRE(cov.alpha == cov.start_constant - (n - 1));
    REQUIRE(cov.beta == cov.start_constant + (n - 1));
    REQUIRE(verify_covering(cov, parts).all_passed());
    std::size_t off = 0;
    for (const auto& p : parts) {
      for (std::size_t a = 0; a < p.size(); ++a) {
        const auto c = cov.assignment[off + a];
        REQUIRE(c < cov.centers.size());
        REQUIRE(rho(cov.centers[c], p[a]) < cov.radii[c]);
      }
      off += p.size();
    }
  }
}

TEST_CASE("extension examples") {
  const HarmonicMajorant h(std::log(8.0));
  Parts single{{DiskPoint(0, 0), DiskPoint(0.7, 0)}};
  auto cov = build_covering(single, h);
  std::vector<Complex> w{Complex(1, 2), Complex(3, 4)};
  CHECK(extend_values(cov, single, 0, w) == w);

  Parts two{{DiskPoint(0, 0)}, {DiskPoint(0.9, 0), DiskPoint(-0.9, 0)}};
  auto c2 = build_covering(two, h);
  auto ext = extend_values(c2, two, 0, {Complex(5, 0)});
  CHECK(ext == std::vector<Complex>{Complex(5, 0), Complex(0, 0), Complex(0, 0)});
  CHECK_THROWS_AS(extend_values(c2, two, 2, {}), InvalidInput);
  CHECK_THROWS_AS(extend_values(c2, two, 1, {Complex(1, 0)}), InvalidInput);
}

TEST_CASE("property: extension restricts to the identity and stays finite") {
  gen::Source src(62);
  for (int t = 0; t < 30; ++t) {
    const int n = src.integer(2, 3);
    // Parts that share clusters so disks actually hold points of several parts.
    std::vector<DiskPoint> pts = src.clusters(src.integer(2, 5), n, 1e-7);
    Parts parts(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < pts.size(); ++i) parts[i % static_cast<std::size_t>(n)].push_back(pts[i]);
    const auto h0 = fit_separation_majorant(parts);
    const auto cov = build_covering(parts, h0);
    REQUIRE(verify_covering(cov, parts).all_passed());
    std::vector<DiskPoint> all;
    for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    for (std::size_t j = 0; j < parts.size(); ++j) {
      std::vector<Complex> w;
      for (std::size_t a = 0; a < parts[j].size(); ++a) w.push_back(src.value());
      const auto ext = extend_values(cov, parts, j, w);
      std::size_t base = 0;
      for (std::size_t q = 0; q < j; ++q) base += parts[q].size();
      for (std::size_t a = 0; a < w.size(); ++a) REQUIRE(ext[base + a] == w[a]);
      HarmonicMajorant ht(kLog3);
      for (int k = 1; k <= n; ++k) {
        const std::array<HarmonicMajorant, 2> terms{ht, h0};
        const std::array<double, 2> scales{1.0, cov.beta};
        ht = combine(terms, scales, std::log(2.0));
        const auto s = xn_statistic(LabeledSequence(all, std::nullopt, ext), k, ht);
        REQUIRE(std::isfinite(s.sup_value));
      }
    }
  }
}

TEST_CASE("fit separation majorant") {
  Parts parts{{DiskPoint(0, 0), DiskPoint(0.01, 0)}, {DiskPoint(0.5, 0)}};
  auto h = fit_separation_majorant(parts, 0.0);
  CHECK(h.constant() == Approx(-std::log(0.01)));
  Parts far{{DiskPoint(0, 0), DiskPoint(0.9, 0)}};
  CHECK(fit_separation_majorant(far, 0.0).constant() == Approx(std::log(8.0)));
}
