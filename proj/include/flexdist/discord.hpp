#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flexdist/metrics.hpp"
#include "flexdist/types.hpp"

namespace flexdist {

/// A long series cut into N consecutive days of s samples each.
struct DayMatrix {
  std::vector<TimeSeries> days;
  std::size_t samples_per_day = 0;
  std::optional<Timestamp> first_timestamp;
  std::optional<Timestamp> last_timestamp;
  /// Trailing samples that did not fill a complete day.
  std::size_t dropped_tail = 0;
};

/// Nearest-neighbour distance and index (0-based) for every day.
struct MatrixProfile {
  std::vector<double> nn_distance;
  std::vector<std::size_t> nn_index;
};

struct Discord {
  std::size_t day;
  double nn_distance;
};

/// Splits into floor(len / s) days, keeping the source interval and a
/// per-day start time when the source has one. Throws TooShort below two days.
DayMatrix segment_days(const TimeSeries& series, std::size_t samples_per_day);

/// Explicit all-pairs profile. With `use_symmetry` each unordered pair is
/// evaluated once as distance(day_lo, day_hi); otherwise both orders are
/// evaluated. Ties on the nearest distance go to the lowest day index.
MatrixProfile matrix_profile(const DayMatrix& days, const Measure& measure, bool use_symmetry = true);

/// Day whose nearest neighbour is farthest away; lowest index on ties.
Discord find_discord(const MatrixProfile& profile);

}  // namespace flexdist
