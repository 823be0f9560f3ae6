#include "flexdist/discord.hpp"

#include <limits>

#include "flexdist/error.hpp"

namespace flexdist {

DayMatrix segment_days(const TimeSeries& series, std::size_t samples_per_day) {
  if (samples_per_day == 0) throw InvalidArgument("samples_per_day must be positive");
  const std::size_t n_days = series.size() / samples_per_day;
  if (n_days < 2) throw TooShort(series.size(), samples_per_day);

  DayMatrix out;
  out.samples_per_day = samples_per_day;
  out.dropped_tail = series.size() % samples_per_day;
  out.first_timestamp = series.time_at(0);
  out.last_timestamp = series.time_at(series.size() - 1);
  out.days.reserve(n_days);
  const auto values = series.values();
  for (std::size_t d = 0; d < n_days; ++d) {
    const auto first = values.begin() + static_cast<std::ptrdiff_t>(d * samples_per_day);
    out.days.emplace_back(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(samples_per_day)),
                          series.interval_minutes(), series.time_at(d * samples_per_day));
  }
  return out;
}

MatrixProfile matrix_profile(const DayMatrix& days, const Measure& measure, bool use_symmetry) {
  const std::size_t n = days.days.size();
  if (n < 2) throw InvalidArgument("matrix profile needs at least 2 days");

  std::vector<double> dist(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = use_symmetry ? a + 1 : 0; b < n; ++b) {
      if (a == b) continue;
      const double d = distance(measure, days.days[a], days.days[b]);
      dist[a * n + b] = d;
      if (use_symmetry) dist[b * n + a] = d;
    }
  }

  MatrixProfile p{std::vector<double>(n, std::numeric_limits<double>::infinity()), std::vector<std::size_t>(n, 0)};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      if (dist[a * n + b] < p.nn_distance[a]) {
        p.nn_distance[a] = dist[a * n + b];
        p.nn_index[a] = b;
      }
    }
  }
  return p;
}

Discord find_discord(const MatrixProfile& profile) {
  if (profile.nn_distance.empty()) throw InvalidArgument("empty matrix profile");
  Discord best{0, profile.nn_distance[0]};
  for (std::size_t a = 1; a < profile.nn_distance.size(); ++a) {
    if (profile.nn_distance[a] > best.nn_distance) best = {a, profile.nn_distance[a]};
  }
  return best;
}

}  // namespace flexdist
