#include "flexdist/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "flexdist/lsap.hpp"

namespace flexdist {

std::string Measure::name() const {
  switch (kind_) {
    case MeasureKind::Euclidean:
      return "ed";
    case MeasureKind::Dtw:
      return "dtw";
    case MeasureKind::Flexibility:
      return "fd";
  }
  return "?";
}

double euclidean(const TimeSeries& x, const TimeSeries& y) {
  validate_pair(x, y);
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

DtwResult dtw(const TimeSeries& x, const TimeSeries& y) {
  validate_pair(x, y);
  const std::size_t m = x.size();
  const std::size_t w = m + 1;
  const double inf = std::numeric_limits<double>::infinity();

  // theta[(i+1)*w + (j+1)] is the cumulative cost of aligning x[0..i] with y[0..j].
  std::vector<double> theta(w * w, inf);
  theta[0] = 0.0;
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      const double d = x[i - 1] - y[j - 1];
      const double best = std::min({theta[(i - 1) * w + (j - 1)], theta[(i - 1) * w + j], theta[i * w + (j - 1)]});
      theta[i * w + j] = d * d + best;
    }
  }

  // Backtrack, preferring the diagonal, then a step in i, then in j.
  std::vector<std::pair<std::size_t, std::size_t>> path;
  std::size_t i = m, j = m;
  path.emplace_back(i - 1, j - 1);
  while (i > 1 || j > 1) {
    if (i == 1) {
      --j;
    } else if (j == 1) {
      --i;
    } else {
      const double diag = theta[(i - 1) * w + (j - 1)];
      const double up = theta[(i - 1) * w + j];
      const double left = theta[i * w + (j - 1)];
      if (diag <= up && diag <= left) {
        --i;
        --j;
      } else if (up <= left) {
        --i;
      } else {
        --j;
      }
    }
    path.emplace_back(i - 1, j - 1);
  }
  std::reverse(path.begin(), path.end());
  return {std::sqrt(theta[m * w + m]), std::move(path)};
}

CostMatrix fd_cost_matrix(const TimeSeries& x, const TimeSeries& y, const FdWeights& w) {
  validate_pair(x, y);
  const std::size_t m = x.size();
  const double p = w.amplitude();
  const double t = w.temporal_for(x.values(), y.values());
  std::vector<double> entries(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      entries[i * m + j] = detail::fd_entry(x[i], y[j], i, j, p, t).total;
    }
  }
  return CostMatrix(m, std::move(entries));
}

FdResult flexibility_distance(const TimeSeries& x, const TimeSeries& y, const FdWeights& w) {
  Assignment a = lsap::solve(fd_cost_matrix(x, y, w));
  const double d = a.total_cost();
  return {d, std::move(a)};
}

double distance(const Measure& measure, const TimeSeries& x, const TimeSeries& y) {
  switch (measure.kind()) {
    case MeasureKind::Euclidean:
      return euclidean(x, y);
    case MeasureKind::Dtw:
      return dtw(x, y).distance;
    case MeasureKind::Flexibility:
      return flexibility_distance(x, y, measure.weights()).distance;
  }
  return 0.0;
}

}  // namespace flexdist
