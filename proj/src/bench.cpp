#include "flexdist/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "flexdist/error.hpp"

namespace flexdist::bench {

double loglog_slope(const std::vector<std::pair<double, double>>& size_and_time) {
  const double n = static_cast<double>(size_and_time.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [size, time] : size_and_time) {
    const double lx = std::log(size);
    const double ly = std::log(std::max(time, 1e-9));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  return denom == 0.0 ? 0.0 : (n * sxy - sx * sy) / denom;
}

Report run(const std::vector<Measure>& measures, const std::vector<std::size_t>& sizes, std::size_t repetitions,
           std::uint64_t seed) {
  if (repetitions == 0) throw InvalidArgument("repetitions must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> value(0.0, 20.0);
  auto random_series = [&](std::size_t m) {
    std::vector<double> v(m);
    for (double& x : v) x = value(rng);
    return TimeSeries(std::move(v));
  };

  Report report;
  for (const Measure& measure : measures) {
    std::vector<std::pair<double, double>> points;
    for (std::size_t m : sizes) {
      if (m == 0) throw InvalidArgument("benchmark sizes must be positive");
      std::vector<double> ms;
      ms.reserve(repetitions);
      volatile double sink = 0.0;
      for (std::size_t r = 0; r < repetitions; ++r) {
        const TimeSeries x = random_series(m);
        const TimeSeries y = random_series(m);
        const auto t0 = std::chrono::steady_clock::now();
        sink = sink + distance(measure, x, y);
        const auto t1 = std::chrono::steady_clock::now();
        ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
      }
      std::nth_element(ms.begin(), ms.begin() + static_cast<std::ptrdiff_t>(ms.size() / 2), ms.end());
      double median = ms[ms.size() / 2];
      if (ms.size() % 2 == 0) {
        const double lower = *std::max_element(ms.begin(), ms.begin() + static_cast<std::ptrdiff_t>(ms.size() / 2));
        median = 0.5 * (median + lower);
      }
      report.timings.push_back({measure.name(), m, repetitions, median});
      points.emplace_back(static_cast<double>(m), median);
    }
    if (points.size() >= 2) report.slopes.push_back({measure.name(), loglog_slope(points)});
  }
  return report;
}

}  // namespace flexdist::bench
