#pragma once

#include <optional>
#include <vector>

#include "nevkit/geometry.hpp"

namespace nevkit {

/// Finite sequence of pairwise (bitwise) distinct disk points, with optional
/// subsequence labels 1..n and optional values omega(lambda).
class LabeledSequence {
 public:
  LabeledSequence() = default;
  explicit LabeledSequence(std::vector<DiskPoint> points,
                           std::optional<std::vector<int>> labels = std::nullopt,
                           std::optional<std::vector<Complex>> values = std::nullopt);

  /// Concatenates parts in order; labels are the 1-based part numbers.
  static LabeledSequence from_parts(const std::vector<std::vector<DiskPoint>>& parts);

  const std::vector<DiskPoint>& points() const noexcept { return points_; }
  const std::optional<std::vector<int>>& labels() const noexcept { return labels_; }
  const std::optional<std::vector<Complex>>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return points_.size(); }

  /// Throws InvalidInput if the sequence carries no values.
  const std::vector<Complex>& require_values() const;

  LabeledSequence with_values(std::vector<Complex> values) const;
  LabeledSequence with_labels(std::vector<int> labels) const;

  std::optional<std::size_t> index_of(const DiskPoint& p) const noexcept;

  /// Number of parts (max label); 1 when unlabeled.
  int part_count() const noexcept;
  /// Indices grouped by label; a single group when unlabeled.
  std::vector<std::vector<std::size_t>> part_indices() const;
  std::vector<std::vector<DiskPoint>> part_points() const;

  friend bool operator==(const LabeledSequence&, const LabeledSequence&) = default;

 private:
  std::vector<DiskPoint> points_;
  std::optional<std::vector<int>> labels_;
  std::optional<std::vector<Complex>> values_;
};

/// Throws InvalidInput naming the first pair of bitwise-equal points.
void require_distinct(const std::vector<DiskPoint>& points);

}  // namespace nevkit
