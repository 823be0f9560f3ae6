#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flexdist/metrics.hpp"
#include "flexdist/types.hpp"

namespace flexdist {

struct NamedSeries {
  std::string name;
  TimeSeries series;
};

/// Original profile O, ideal profile E and candidate rescheduling scenarios,
/// all of one length.
class ScenarioSet {
 public:
  ScenarioSet(TimeSeries original, TimeSeries ideal, std::vector<NamedSeries> scenarios);

  const TimeSeries& original() const noexcept { return original_; }
  const TimeSeries& ideal() const noexcept { return ideal_; }
  const std::vector<NamedSeries>& scenarios() const noexcept { return scenarios_; }

 private:
  TimeSeries original_;
  TimeSeries ideal_;
  std::vector<NamedSeries> scenarios_;
};

struct RankedRow {
  std::string name;
  double distance;
  /// 1-based; equal distances share the lower rank.
  std::size_t rank;
  /// baseline - distance. Negative means the scenario is farther from the
  /// ideal than doing nothing.
  double improvement;
  bool worse_than_baseline;
};

struct RankedReport {
  double baseline;
  /// Ascending by distance, then by name.
  std::vector<RankedRow> rows;
};

/// Distances within this relative gap rank as ties.
inline constexpr double kRankTieTolerance = 1e-12;

RankedReport rank_scenarios(const ScenarioSet& set, const Measure& measure);

}  // namespace flexdist
