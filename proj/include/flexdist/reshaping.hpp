#pragma once

#include <cstddef>
#include <vector>

#include "flexdist/types.hpp"

namespace flexdist {

/// One pairing of the optimal FD assignment: the sample at `from_index` of
/// the source series is matched to `to_index` of the target series.
struct Move {
  std::size_t from_index;
  std::size_t to_index;
  double source_value;
  double target_value;
  double amplitude_cost;
  double temporal_cost;
  double total_cost;

  friend bool operator==(const Move&, const Move&) = default;
};

/// The full optimal reshaping strategy: one Move per source index, in source
/// order, including zero-cost stays.
struct ReshapePlan {
  std::vector<Move> moves;
  double total_cost;
  FdWeights weights_used;
  /// Temporal weight actually applied to this pair.
  double temporal_weight;

  friend bool operator==(const ReshapePlan&, const ReshapePlan&) = default;
};

ReshapePlan plan(const TimeSeries& x, const TimeSeries& y, const FdWeights& w = {});

/// Moves that change slot or amplitude, in plan order.
std::vector<Move> moved_only(const ReshapePlan& plan);

}  // namespace flexdist
