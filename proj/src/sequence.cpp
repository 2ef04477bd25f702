#include "nevkit/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "nevkit/errors.hpp"

namespace nevkit {

void require_distinct(const std::vector<DiskPoint>& points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a] == points[b]) return a < b;
    return points[a] < points[b];
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points[order[k - 1]] == points[order[k]]) {
      throw InvalidInput("points " + std::to_string(order[k - 1]) + " and " +
                         std::to_string(order[k]) + " coincide");
    }
  }
}

LabeledSequence::LabeledSequence(std::vector<DiskPoint> points,
                                 std::optional<std::vector<int>> labels,
                                 std::optional<std::vector<Complex>> values)
    : points_(std::move(points)), labels_(std::move(labels)), values_(std::move(values)) {
  require_distinct(points_);
  if (labels_) {
    if (labels_->size() != points_.size()) throw InvalidInput("labels must cover every point");
    for (int l : *labels_) {
      if (l < 1) throw InvalidInput("labels are 1-based subsequence indices");
    }
  }
  if (values_) {
    if (values_->size() != points_.size()) throw InvalidInput("values must cover every point");
    for (const auto& v : *values_) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw InvalidInput("values must be finite");
      }
    }
  }
}

LabeledSequence LabeledSequence::from_parts(const std::vector<std::vector<DiskPoint>>& parts) {
  std::vector<DiskPoint> points;
  std::vector<int> labels;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    for (const auto& p : parts[j]) {
      points.push_back(p);
      labels.push_back(static_cast<int>(j) + 1);
    }
  }
  return LabeledSequence(std::move(points), std::move(labels));
}

const std::vector<Complex>& LabeledSequence::require_values() const {
  if (!values_) throw InvalidInput("sequence has no values (omega) attached");
  return *values_;
}

LabeledSequence LabeledSequence::with_values(std::vector<Complex> values) const {
  return LabeledSequence(points_, labels_, std::move(values));
}

LabeledSequence LabeledSequence::with_labels(std::vector<int> labels) const {
  return LabeledSequence(points_, std::move(labels), values_);
}

std::optional<std::size_t> LabeledSequence::index_of(const DiskPoint& p) const noexcept {
  auto it = std::find(points_.begin(), points_.end(), p);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

int LabeledSequence::part_count() const noexcept {
  if (!labels_ || labels_->empty()) return 1;
  return *std::max_element(labels_->begin(), labels_->end());
}

std::vector<std::vector<std::size_t>> LabeledSequence::part_indices() const {
  std::vector<std::vector<std::size_t>> parts(static_cast<std::size_t>(part_count()));
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const int label = labels_ ? (*labels_)[i] : 1;
    parts[static_cast<std::size_t>(label - 1)].push_back(i);
  }
  return parts;
}

std::vector<std::vector<DiskPoint>> LabeledSequence::part_points() const {
  std::vector<std::vector<DiskPoint>> out;
  for (const auto& idx : part_indices()) {
    auto& part = out.emplace_back();
    for (auto i : idx) part.push_back(points_[i]);
  }
  return out;
}

}  // namespace nevkit
