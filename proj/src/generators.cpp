#include "nevkit/generators.hpp"

#include <cmath>
#include <numbers>

#include "nevkit/errors.hpp"
#include "nevkit/random.hpp"

namespace nevkit {

namespace {

constexpr int kMaxAttempts = 100000;

LabeledSequence radial(const GeneratorParams& p) {
  // 1 - 2^{-50} rounds into the rejected boundary band.
  if (p.m < 1 || p.m > 49) throw InvalidInput("radial_exponential: m must be in [1, 49]");
  std::vector<DiskPoint> pts;
  for (int k = 1; k <= p.m; ++k) pts.emplace_back(1.0 - std::ldexp(1.0, -k), 0.0);
  return LabeledSequence(std::move(pts), std::vector<int>(static_cast<std::size_t>(p.m), 1));
}

LabeledSequence random_union(const GeneratorParams& p, Rng& rng) {
  if (p.n < 1) throw InvalidInput("random_union: n must be >= 1");
  if (p.m < p.n) throw InvalidInput("random_union: m must be >= n");
  if (!(p.separation > 0.0 && p.separation < 1.0)) {
    throw InvalidInput("random_union: separation must be in (0, 1)");
  }
  if (!(p.max_radius > 0.0 && p.max_radius < 1.0)) {
    throw InvalidInput("random_union: max_radius must be in (0, 1)");
  }
  std::vector<std::vector<DiskPoint>> parts(static_cast<std::size_t>(p.n));
  std::vector<DiskPoint> all;
  for (int i = 0; i < p.m; ++i) {
    auto& part = parts[static_cast<std::size_t>(i % p.n)];
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt == kMaxAttempts) throw InvalidInput("random_union: separation too large for m");
      DiskPoint z = rng.point_in_disk(p.max_radius);
      bool ok = true;
      for (const auto& w : part) ok = ok && rho(z, w) >= p.separation;
      for (const auto& w : all) ok = ok && !(z == w);
      if (ok) {
        part.push_back(z);
        all.push_back(z);
        break;
      }
    }
  }
  return LabeledSequence::from_parts(parts);
}

LabeledSequence clustered(const GeneratorParams& p, Rng& rng) {
  if (p.n < 1) throw InvalidInput("clustered: n must be >= 1");
  if (p.clusters < 1 || p.clusters > 64) throw InvalidInput("clustered: clusters must be in [1, 64]");
  if (!(p.intra > 0.0 && p.intra <= 1e-2)) throw InvalidInput("clustered: intra must be in (0, 1e-2]");

  std::vector<DiskPoint> centers;
  for (int c = 0; c < p.clusters; ++c) {
    int attempt = 0;
    for (;; ++attempt) {
      if (attempt == kMaxAttempts) throw InvalidInput("clustered: cannot place cluster centers");
      double angle = 2.0 * std::numbers::pi * (c + rng.uniform(-0.25, 0.25)) / p.clusters;
      double radius = rng.uniform(0.3, 0.7);
      DiskPoint z(std::polar(radius, angle));
      bool ok = true;
      for (const auto& w : centers) ok = ok && rho(z, w) >= 0.5;
      if (ok) {
        centers.push_back(z);
        break;
      }
    }
  }

  std::vector<std::vector<DiskPoint>> parts(static_cast<std::size_t>(p.n));
  for (const auto& c : centers) {
    double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    double t = 0.5 * p.intra * c.one_minus_abs2();
    for (int k = 0; k < p.n; ++k) {
      double phi = phase + 2.0 * std::numbers::pi * k / p.n;
      Complex z = p.n == 1 ? c.value() : c.value() + std::polar(t, phi);
      parts[static_cast<std::size_t>(k)].emplace_back(z);
    }
  }
  return LabeledSequence::from_parts(parts);
}

}  // namespace

std::optional<SequenceKind> parse_sequence_kind(std::string_view name) {
  if (name == "radial_exponential") return SequenceKind::radial_exponential;
  if (name == "random_union") return SequenceKind::random_union;
  if (name == "clustered") return SequenceKind::clustered;
  return std::nullopt;
}

std::string to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::radial_exponential: return "radial_exponential";
    case SequenceKind::random_union: return "random_union";
    case SequenceKind::clustered: return "clustered";
  }
  return "unknown";
}

LabeledSequence generate_sequence(SequenceKind kind, const GeneratorParams& params,
                                  std::uint64_t seed) {
  Rng rng(seed);
  switch (kind) {
    case SequenceKind::radial_exponential: return radial(params);
    case SequenceKind::random_union: return random_union(params, rng);
    case SequenceKind::clustered: return clustered(params, rng);
  }
  throw InvalidInput("unknown sequence kind");
}

}  // namespace nevkit
