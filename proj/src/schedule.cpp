#include "flexdist/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "flexdist/error.hpp"

namespace flexdist {

ScenarioSet::ScenarioSet(TimeSeries original, TimeSeries ideal, std::vector<NamedSeries> scenarios)
    : original_(std::move(original)), ideal_(std::move(ideal)), scenarios_(std::move(scenarios)) {
  validate_pair(original_, ideal_);
  for (const auto& s : scenarios_) validate_pair(s.series, ideal_);
}

RankedReport rank_scenarios(const ScenarioSet& set, const Measure& measure) {
  RankedReport report{distance(measure, set.original(), set.ideal()), {}};
  for (const auto& s : set.scenarios()) {
    const double d = distance(measure, s.series, set.ideal());
    report.rows.push_back({s.name, d, 0, report.baseline - d, d > report.baseline});
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const RankedRow& a, const RankedRow& b) {
    return a.distance < b.distance || (a.distance == b.distance && a.name < b.name);
  });

  // Runs of tied distances are anchored at their first (smallest) member and
  // listed by name.
  auto tied = [](double a, double b) { return std::abs(a - b) <= kRankTieTolerance * std::max({1.0, a, b}); };
  auto& rows = report.rows;
  for (std::size_t first = 0; first < rows.size();) {
    std::size_t last = first + 1;
    while (last < rows.size() && tied(rows[first].distance, rows[last].distance)) ++last;
    std::stable_sort(rows.begin() + static_cast<std::ptrdiff_t>(first), rows.begin() + static_cast<std::ptrdiff_t>(last),
                     [](const RankedRow& a, const RankedRow& b) { return a.name < b.name; });
    for (std::size_t r = first; r < last; ++r) rows[r].rank = first + 1;
    first = last;
  }
  return report;
}

}  // namespace flexdist
