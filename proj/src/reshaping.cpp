#include "flexdist/reshaping.hpp"

#include "flexdist/metrics.hpp"

namespace flexdist {

ReshapePlan plan(const TimeSeries& x, const TimeSeries& y, const FdWeights& w) {
  const FdResult fd = flexibility_distance(x, y, w);
  const double p = w.amplitude();
  const double t = w.temporal_for(x.values(), y.values());

  ReshapePlan out{{}, fd.distance, w, t};
  out.moves.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::size_t j = fd.assignment[i];
    const auto e = detail::fd_entry(x[i], y[j], i, j, p, t);
    out.moves.push_back({i, j, x[i], y[j], e.amplitude, e.temporal, e.total});
  }
  return out;
}

std::vector<Move> moved_only(const ReshapePlan& plan) {
  std::vector<Move> out;
  for (const Move& m : plan.moves) {
    if (m.from_index != m.to_index || m.amplitude_cost > 0.0) out.push_back(m);
  }
  return out;
}

}  // namespace flexdist
