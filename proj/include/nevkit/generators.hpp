#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "nevkit/sequence.hpp"

namespace nevkit {

enum class SequenceKind { radial_exponential, random_union, clustered };

std::optional<SequenceKind> parse_sequence_kind(std::string_view name);
std::string to_string(SequenceKind kind);

struct GeneratorParams {
  int m = 12;              // point count (radial_exponential, random_union)
  int n = 1;               // parts, or points per cluster
  int clusters = 3;        // clustered only
  double intra = 1e-6;     // clustered: pseudohyperbolic diameter of a cluster
  double separation = 0.2; // random_union: minimum rho inside a part
  double max_radius = 0.9; // random_union: points drawn from |z| < max_radius
};

/// Deterministic in (kind, params, seed).
///
/// radial_exponential: lambda_k = 1 - 2^{-k}, k = 1..m, one part.
/// random_union: m points dealt round-robin into n parts, each part with
///   pairwise rho >= separation (rejection sampling).
/// clustered: `clusters` well separated centers with n points on a circle of
///   pseudohyperbolic diameter about `intra` around each; point k of every
///   cluster is labeled k + 1.
///
/// Throws InvalidInput for parameters out of range or when rejection sampling
/// gives up.
LabeledSequence generate_sequence(SequenceKind kind, const GeneratorParams& params,
                                  std::uint64_t seed);

}  // namespace nevkit
