#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flexdist/metrics.hpp"

namespace flexdist::bench {

struct Timing {
  std::string measure;
  std::size_t size;
  std::size_t repetitions;
  double median_ms;
};

struct Slope {
  std::string measure;
  double value;
};

struct Report {
  std::vector<Timing> timings;
  /// Least-squares slope of log(median) against log(size), per measure,
  /// when at least two sizes were timed.
  std::vector<Slope> slopes;
};

inline const std::vector<std::size_t> kDefaultSizes = {24, 48, 96, 192};
inline constexpr std::size_t kMinRepetitions = 20;

/// Times `distance(measure, x, y)` on fresh random pairs (values uniform in
/// [0, 20]) for every measure and size, reporting the median wall time.
Report run(const std::vector<Measure>& measures, const std::vector<std::size_t>& sizes,
           std::size_t repetitions = kMinRepetitions, std::uint64_t seed = 42);

double loglog_slope(const std::vector<std::pair<double, double>>& size_and_time);

}  // namespace flexdist::bench
