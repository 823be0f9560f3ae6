#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "flexdist/types.hpp"

namespace flexdist {

enum class MeasureKind { Euclidean, Dtw, Flexibility };

/// One of the three distance measures. FD carries its weights.
class Measure {
 public:
  static Measure euclidean() { return Measure(MeasureKind::Euclidean, {}); }
  static Measure dtw() { return Measure(MeasureKind::Dtw, {}); }
  static Measure flexibility(FdWeights weights = {}) { return Measure(MeasureKind::Flexibility, weights); }

  MeasureKind kind() const noexcept { return kind_; }
  const FdWeights& weights() const noexcept { return weights_; }
  /// "ed", "dtw" or "fd".
  std::string name() const;

 private:
  Measure(MeasureKind kind, FdWeights weights) : kind_(kind), weights_(weights) {}

  MeasureKind kind_;
  FdWeights weights_;
};

struct DtwResult {
  double distance;
  /// One optimal warping path as 0-based (i, j) cells from (0,0) to (m-1,m-1).
  std::vector<std::pair<std::size_t, std::size_t>> path;
};

struct FdResult {
  double distance;
  Assignment assignment;
};

/// sqrt(sum (x_i - y_i)^2).
double euclidean(const TimeSeries& x, const TimeSeries& y);

/// Unconstrained DTW with the symmetric three-way step pattern, no warping
/// window. The distance is the square root of the cumulative squared cost.
DtwResult dtw(const TimeSeries& x, const TimeSeries& y);

/// Reshaping-effort matrix C(i,j) = |x_i - y_j| * P + |i - j| * T.
CostMatrix fd_cost_matrix(const TimeSeries& x, const TimeSeries& y, const FdWeights& w = {});

/// Minimum of sum C(i, sigma(i)) over all permutations sigma, solved as a
/// linear sum assignment problem. No square root is applied, so FD values
/// are not on the same scale as ED or DTW.
FdResult flexibility_distance(const TimeSeries& x, const TimeSeries& y, const FdWeights& w = {});

double distance(const Measure& measure, const TimeSeries& x, const TimeSeries& y);

namespace detail {

struct FdEntry {
  double amplitude;
  double temporal;
  double total;
};

/// Shared by the cost matrix and the reshape plan so both see identical bits.
inline FdEntry fd_entry(double xi, double yj, std::size_t i, std::size_t j, double p, double t) {
  const double lag = static_cast<double>(i > j ? i - j : j - i);
  const double diff = xi > yj ? xi - yj : yj - xi;
  const double amplitude = diff * p;
  const double temporal = lag * t;
  return {amplitude, temporal, amplitude + temporal};
}

}  // namespace detail

}  // namespace flexdist
