#include <cmath>
#include <vector>

#include "doctest.h"
#include "gen.hpp"
#include "nevkit/covering.hpp"
#include "nevkit/errors.hpp"
#include "nevkit/interpolator.hpp"
#include "oracle.hpp"

using namespace nevkit;
using doctest::Approx;

using Parts = std::vector<std::vector<DiskPoint>>;

namespace {

// Fixed rational function with poles at 1.5 and -2i.
Complex rational(Complex z) { return (z * z + Complex(0.5, -0.25)) / ((z - 1.5) * (z + Complex(0.0, 2.0))); }

HarmonicMajorant separating(const Parts& parts) {
  return combine(fit_separation_majorant(parts), 1.0, std::log(2.0));
}

}  // namespace

TEST_CASE("base interpolant examples") {
  DiskPoint l(0.3, -0.2);
  auto g = base_interpolate({l}, {Complex(2, 3)});
  gen::Source src(70);
  for (int i = 0; i < 20; ++i) CHECK(std::abs(g(src.point()) - Complex(2, 3)) < 1e-15);

  auto zero = base_interpolate({DiskPoint(0, 0), DiskPoint(0.5, 0)}, {Complex(0, 0), Complex(0, 0)});
  CHECK(zero(DiskPoint(0.1, 0.7)) == Complex(0, 0));

  auto g2 = base_interpolate({DiskPoint(0, 0), DiskPoint(0.5, 0)}, {Complex(1, 0), Complex(0, 0)});
  CHECK(std::abs(g2(DiskPoint(0, 0)) - 1.0) < 1e-15);
  CHECK(std::abs(g2(DiskPoint(0.5, 0))) < 1e-15);
  for (int i = 0; i < 20; ++i) {
    DiskPoint z = src.point();
    CHECK(std::abs(g2(z) - oracle::b(0.5, z.value()) / -0.5) < 1e-14);
  }
  CHECK_THROWS_AS(base_interpolate({DiskPoint(0, 0), DiskPoint(0, 0)}, {Complex(1, 0), Complex(2, 0)}),
                  InvalidInput);
  CHECK_THROWS_AS(base_interpolate({DiskPoint(0, 0)}, {}), InvalidInput);
}

TEST_CASE("property: base solver growth bound") {
  gen::Source src(71);
  for (int t = 0; t < 100; ++t) {
    auto nodes = src.distinct_points(static_cast<std::size_t>(src.integer(1, 10)), 0.9);
    std::vector<Complex> v;
    for (std::size_t i = 0; i < nodes.size(); ++i) v.push_back(src.value(3.0));
    auto g = base_interpolate(nodes, v);
    double bound = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) bound += std::abs(v[k]) / g.margins()[k];
    for (int i = 0; i < 50; ++i) REQUIRE(std::abs(g(src.point(0.999))) <= bound * (1 + 1e-12));
    for (std::size_t k = 0; k < nodes.size(); ++k) REQUIRE(std::abs(g(nodes[k]) - v[k]) <= 1e-12 * (1 + std::abs(v[k])));
  }
}

TEST_CASE("chain with one part equals the base interpolant") {
  gen::Source src(72);
  auto parts = src.separated_union(1, 6, 0.3);
  std::vector<std::vector<Complex>> omega{{}};
  for (std::size_t i = 0; i < parts[0].size(); ++i) omega[0].push_back(src.value());
  auto chain = chained_solve(parts, omega, separating(parts));
  auto g = base_interpolate(parts[0], omega[0]);
  CHECK(chain.blaschke_factors().empty());
  for (int i = 0; i < 20; ++i) {
    DiskPoint z = src.point();
    CHECK(chain(z) == g(z));
  }
}

TEST_CASE("chained solve preconditions") {
  Parts overlap{{DiskPoint(0, 0)}, {DiskPoint(0, 0)}};
  std::vector<std::vector<Complex>> w{{Complex(1, 0)}, {Complex(2, 0)}};
  CHECK_THROWS_AS(chained_solve(overlap, w, HarmonicMajorant(3.0)), InvalidInput);
  Parts tight{{DiskPoint(0, 0), DiskPoint(0.01, 0)}};
  std::vector<std::vector<Complex>> w1{{Complex(1, 0), Complex(2, 0)}};
  CHECK_THROWS_AS(chained_solve(tight, w1, HarmonicMajorant(kLog3)), PropertyViolation);
  Parts ok{{DiskPoint(0, 0)}};
  CHECK_THROWS_AS(chained_solve(ok, w1, HarmonicMajorant(kLog3)), InvalidInput);
}

TEST_CASE("property: node residuals on random unions") {
  gen::Source src(73);
  for (int t = 0; t < 60; ++t) {
    const int n = src.integer(1, 3);
    Parts parts;
    if (src.coin()) {
      parts = src.separated_union(n, src.integer(1, 15), src.range(0.1, 0.4));
    } else {
      auto pts = src.clusters(src.integer(1, 8), n, std::pow(10.0, -src.range(2, 8)));
      parts.assign(static_cast<std::size_t>(n), {});
      for (std::size_t i = 0; i < pts.size(); ++i) parts[i % static_cast<std::size_t>(n)].push_back(pts[i]);
    }
    std::vector<std::vector<Complex>> omega;
    double max_w = 0.0;
    for (const auto& p : parts) {
      auto& o = omega.emplace_back();
      for (std::size_t i = 0; i < p.size(); ++i) {
        o.push_back(src.value(5.0));
        max_w = std::max(max_w, std::abs(o.back()));
      }
    }
    auto chain = chained_solve(parts, omega, separating(parts));
    REQUIRE(max_node_residual(chain, omega) <= 1e-9 * (1.0 + max_w));
  }
}

TEST_CASE("property: chain reproduces a rational function") {
  gen::Source src(74);
  for (int t = 0; t < 40; ++t) {
    const int n = src.integer(2, 3);
    auto parts = src.separated_union(n, src.integer(2, 10), 0.2);
    std::vector<std::vector<Complex>> omega;
    for (const auto& p : parts) {
      auto& o = omega.emplace_back();
      for (const auto& z : p) o.push_back(rational(z.value()));
    }
    auto chain = chained_solve(parts, omega, separating(parts));
    for (std::size_t j = 0; j < parts.size(); ++j) {
      for (std::size_t a = 0; a < parts[j].size(); ++a) {
        const Complex want = rational(parts[j][a].value());
        REQUIRE(std::abs(chain(parts[j][a]) - want) <= 1e-9 * (1.0 + std::abs(want)));
      }
    }
  }
}

TEST_CASE("property: newton evaluation matches the closed form") {
  gen::Source src(75);
  for (int t = 0; t < 5; ++t) {
    auto parts = src.separated_union(3, 6, 0.2);
    std::vector<std::vector<Complex>> omega;
    for (const auto& p : parts) {
      auto& o = omega.emplace_back();
      for (std::size_t i = 0; i < p.size(); ++i) o.push_back(src.value());
    }
    auto chain = chained_solve(parts, omega, separating(parts));
    for (int i = 0; i < 1000; ++i) {
      DiskPoint z = src.point(0.99);
      const Complex a = chain.evaluate(z);
      const Complex b = chain.evaluate_closed_form(z);
      REQUIRE(std::abs(a - b) <= 1e-10 * std::max(1.0, std::abs(b)));
    }
  }
}

TEST_CASE("stage targets use the true nearest earlier point") {
  gen::Source src(76);
  auto parts = src.separated_union(3, 8, 0.2);
  std::vector<std::vector<Complex>> omega;
  for (const auto& p : parts) omega.emplace_back(p.size(), Complex(1, 0));
  auto chain = chained_solve(parts, omega, separating(parts));
  const auto& diag = chain.diagnostics();
  REQUIRE(diag.size() == 3);
  for (std::size_t j = 1; j < 3; ++j) {
    for (std::size_t k = 0; k < parts[j].size(); ++k) {
      const auto& nd = diag[j].nodes[k];
      REQUIRE(nd.pairing.size() == j);
      for (std::size_t i = 0; i < j; ++i) {
        std::size_t best = 0;
        for (std::size_t a = 1; a < parts[i].size(); ++a) {
          if (oracle::rho(parts[j][k].value(), parts[i][a].value()) <
              oracle::rho(parts[j][k].value(), parts[i][best].value())) {
            best = a;
          }
        }
        REQUIRE(nd.pairing[i].point == best);
        REQUIRE(nd.pairing[i].distance == Approx(oracle::rho(parts[j][k].value(), parts[i][best].value())));
      }
    }
  }
}

TEST_CASE("stage bound report") {
  gen::Source src(77);
  auto parts = src.separated_union(2, 5, 0.3);
  std::vector<std::vector<Complex>> zero;
  for (const auto& p : parts) zero.emplace_back(p.size(), Complex(0, 0));
  const auto h = separating(parts);
  auto chain = chained_solve(parts, zero, h);
  auto rep = stage_bound_report(chain, h);
  CHECK(rep.flagged == 0);
  for (const auto& e : rep.entries) CHECK(e.abs_value == 0.0);

  // Two parts paired at distance <= 1/2 with moderate data.
  Parts paired{{DiskPoint(0, 0), DiskPoint(0.6, 0)}, {DiskPoint(0.1, 0), DiskPoint(0.65, 0.05)}};
  std::vector<std::vector<Complex>> w{{Complex(0.5, 0), Complex(-0.5, 0)}, {Complex(0.4, 0), Complex(-0.45, 0)}};
  const auto hp = separating(paired);
  auto cp = chained_solve(paired, w, hp);
  auto rp = stage_bound_report(cp, hp);
  CHECK(rp.flagged == 0);
  CHECK(rp.far_pairs == 0);

  // Nearly touching parts with a huge jump and the smallest majorant.
  Parts touching{{DiskPoint(0.2, 0)}, {DiskPoint(0.2 + 1e-9, 0)}};
  std::vector<std::vector<Complex>> jump{{Complex(0, 0)}, {Complex(1e3, 0)}};
  auto ct = chained_solve(touching, jump, HarmonicMajorant(kLog3));
  auto rt = stage_bound_report(ct, HarmonicMajorant(kLog3));
  CHECK(rt.flagged >= 1);
}

TEST_CASE("property: compensated arithmetic keeps the rounding error") {
  gen::Source src(91);
  for (int t = 0; t < 2000; ++t) {
    const double a = src.range(-1e8, 1e8);
    const double b = src.range(-1.0, 1.0);
    // a + b - a recovers b exactly once the error term is kept.
    const auto s = dd::add(dd::add({a, 0.0}, {b, 0.0}), {-a, 0.0});
    CHECK(s.hi == b);
    const auto p = dd::two_prod(a, b);
    CHECK(p.hi == a * b);
    CHECK(std::fma(a, b, -p.hi) == p.lo);
    const Complex w = src.value() + Complex(1e-3, 0.0);
    const CompensatedComplex x(src.value() * 1e6, src.value() * 1e-12);
    const auto back = (x / w) * w;
    CHECK(std::abs(back.re.hi - x.re.hi) <= 1e-28 * std::abs(x.hi()) + 1e-300);
    CHECK(std::abs(back.im.hi - x.im.hi) <= 1e-28 * std::abs(x.hi()) + 1e-300);
  }
  const Complex tiny(3e-200, -1e-210);
  const CompensatedComplex one(Complex(1.0, 0.0));
  CHECK(std::isfinite((one / tiny).re.hi));
  CHECK(std::abs(((one / tiny) * tiny).hi() - Complex(1.0, 0.0)) <= 1e-30);
}

TEST_CASE("ill-conditioned chain still matches the data at the nodes") {
  // Dense parts make f_{j-1} huge at later nodes; the residual must stay at ulp(omega).
  gen::Source src(92);
  for (int t = 0; t < 20; ++t) {
    const Parts parts = src.separated_union(3, 15, 0.05, 0.9);
    std::vector<std::vector<Complex>> omega;
    double top = 0.0;
    for (const auto& p : parts) {
      omega.emplace_back();
      for (std::size_t k = 0; k < p.size(); ++k) {
        omega.back().push_back(src.value() * 10.0);
        top = std::max(top, std::abs(omega.back().back()));
      }
    }
    const auto chain = chained_solve(parts, omega, separating(parts));
    CHECK(max_node_residual(chain, omega) <= 1e-12 * (1.0 + top));
  }
}
