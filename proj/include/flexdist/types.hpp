#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace flexdist {

/// Local-naive wall-clock time. No time zone arithmetic is ever applied.
using Timestamp = std::chrono::sys_seconds;

/// Fixed-interval real-valued samples (power, kW). Immutable once built;
/// construction rejects empty input, non-finite samples and a non-positive
/// interval.
class TimeSeries {
 public:
  explicit TimeSeries(std::vector<double> values, int interval_minutes = 30,
                      std::optional<Timestamp> start = std::nullopt,
                      std::optional<std::string> label = std::nullopt);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  int interval_minutes() const noexcept { return interval_minutes_; }
  const std::optional<Timestamp>& start() const noexcept { return start_; }
  const std::optional<std::string>& label() const noexcept { return label_; }

  /// Timestamp of sample `i`, when the series carries a start time.
  std::optional<Timestamp> time_at(std::size_t i) const;

  TimeSeries with_label(std::string label) const;

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;

 private:
  std::vector<double> values_;
  int interval_minutes_;
  std::optional<Timestamp> start_;
  std::optional<std::string> label_;
};

/// Checks that both series have the same length. Individual series are
/// already valid by construction.
void validate_pair(const TimeSeries& x, const TimeSeries& y);

/// Amplitude weight P and temporal weight T of the FD cost
/// C(i,j) = |x_i - y_j| * P + |i - j| * T.
///
/// The default temporal mode derives T per pair as
/// (max(x ∪ y) - min(x ∪ y)) / m, so one slot of displacement costs about
/// as much as 1/m of the joint amplitude range.
class FdWeights {
 public:
  enum class TemporalMode { MaxMinScaled, Constant };

  FdWeights() = default;

  static FdWeights maxmin_scaled(double amplitude = 1.0);
  static FdWeights constant(double amplitude, double temporal);

  double amplitude() const noexcept { return amplitude_; }
  TemporalMode temporal_mode() const noexcept { return mode_; }
  /// Meaningful only in Constant mode.
  double temporal_constant() const noexcept { return temporal_; }

  /// The temporal weight in force for this particular (validated) pair.
  double temporal_for(std::span<const double> x, std::span<const double> y) const;

  friend bool operator==(const FdWeights&, const FdWeights&) = default;

 private:
  double amplitude_ = 1.0;
  TemporalMode mode_ = TemporalMode::MaxMinScaled;
  double temporal_ = 0.0;
};

/// Dense square matrix of finite, non-negative costs, row-major.
class CostMatrix {
 public:
  CostMatrix(std::size_t dimension, std::vector<double> entries);

  static CostMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t dimension() const noexcept { return m_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }
  std::span<const double> row(std::size_t i) const { return {entries_.data() + i * m_, m_}; }
  std::span<const double> entries() const noexcept { return entries_; }

 private:
  std::size_t m_;
  std::vector<double> entries_;
};

/// A permutation: source index i is routed to target index target_of[i].
/// All indices are 0-based.
class Assignment {
 public:
  Assignment(std::vector<std::size_t> target_of, double total_cost);

  static Assignment identity(std::size_t m, double total_cost = 0.0);

  std::span<const std::size_t> target_of() const noexcept { return target_of_; }
  std::size_t operator[](std::size_t i) const { return target_of_[i]; }
  std::size_t size() const noexcept { return target_of_.size(); }
  double total_cost() const noexcept { return total_cost_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::size_t> target_of_;
  double total_cost_;
};

/// Sum of selected entries taken in ascending order. Transposed problems
/// select the same multiset of entries, so they produce bit-identical totals.
double canonical_sum(std::vector<double> selected);

std::string format_timestamp(const Timestamp& t);

}  // namespace flexdist
