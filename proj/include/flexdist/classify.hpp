#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flexdist/metrics.hpp"
#include "flexdist/types.hpp"

namespace flexdist {

/// Equal-length labelled patterns. `classes` holds each distinct label once,
/// in order of first appearance unless given explicitly.
class LabeledSet {
 public:
  explicit LabeledSet(std::vector<TimeSeries> patterns);
  LabeledSet(std::vector<TimeSeries> patterns, std::vector<std::string> classes);

  const std::vector<TimeSeries>& patterns() const noexcept { return patterns_; }
  const std::vector<std::string>& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return patterns_.size(); }
  const std::string& label(std::size_t i) const { return *patterns_[i].label(); }
  /// Common pattern length (0 for an empty set).
  std::size_t pattern_length() const noexcept { return patterns_.empty() ? 0 : patterns_.front().size(); }

 private:
  std::vector<TimeSeries> patterns_;
  std::vector<std::string> classes_;
};

struct Neighbor {
  std::size_t index;
  double distance;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct KnnResult {
  std::string label;
  std::vector<Neighbor> neighbors;
};

/// Rows are the true class, columns the prediction, both in `classes` order.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(std::vector<std::string> classes);

  void add(std::size_t truth, std::size_t predicted);

  const std::vector<std::string>& classes() const noexcept { return classes_; }
  std::size_t count(std::size_t truth, std::size_t predicted) const { return counts_[truth * k_ + predicted]; }
  std::size_t total() const noexcept;
  std::size_t row_sum(std::size_t truth) const;
  std::size_t column_sum(std::size_t predicted) const;
  /// trace / total, 0 for an empty matrix.
  double accuracy() const noexcept;
  /// Diagonal over column sum; empty when nothing was predicted as that class.
  std::optional<double> precision(std::size_t predicted) const;

 private:
  std::vector<std::string> classes_;
  std::size_t k_;
  std::vector<std::size_t> counts_;
};

struct Evaluation {
  ConfusionMatrix confusion;
  std::vector<std::string> predictions;
};

/// Majority vote among the k nearest training patterns. Neighbours are
/// ordered by (distance, training index); vote ties go to the smallest
/// summed neighbour distance, then to class order. `exclude` removes one
/// training index from consideration (leave-one-out).
KnnResult knn_classify(const TimeSeries& query, const LabeledSet& train, std::size_t k, const Measure& measure,
                       std::optional<std::size_t> exclude = std::nullopt);

/// Classifies every test pattern against `train`. The class order is train's
/// classes followed by any test-only labels.
Evaluation evaluate(const LabeledSet& test, const LabeledSet& train, std::size_t k, const Measure& measure);

/// Each pattern is classified against all others.
Evaluation evaluate_leave_one_out(const LabeledSet& set, std::size_t k, const Measure& measure);

}  // namespace flexdist
