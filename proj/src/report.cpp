#include "flexdist/report.hpp"

namespace flexdist::report {

Json to_json(const FdWeights& w) {
  Json j;
  j["amplitude_weight"] = w.amplitude();
  if (w.temporal_mode() == FdWeights::TemporalMode::MaxMinScaled) {
    j["temporal_weight"] = "maxmin";
  } else {
    j["temporal_weight"] = w.temporal_constant();
  }
  return j;
}

Json to_json(const Measure& m) {
  Json j;
  j["kind"] = m.name();
  if (m.kind() == MeasureKind::Flexibility) {
    const Json weights = to_json(m.weights());
    for (const auto& [k, v] : weights.items()) j[k] = v;
  }
  return j;
}

Json to_json(const Move& m) {
  return Json{{"from_index", m.from_index},         {"to_index", m.to_index},
              {"source_value", m.source_value},     {"target_value", m.target_value},
              {"amplitude_cost", m.amplitude_cost}, {"temporal_cost", m.temporal_cost},
              {"total_cost", m.total_cost}};
}

Json to_json(const ReshapePlan& p) {
  Json moves = Json::array();
  for (const Move& m : p.moves) moves.push_back(to_json(m));
  Json j;
  j["total_cost"] = p.total_cost;
  j["weights"] = to_json(p.weights_used);
  j["temporal_weight_applied"] = p.temporal_weight;
  j["moves"] = std::move(moves);
  return j;
}

Json to_json(const CostMatrix& c) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    const auto r = c.row(i);
    rows.push_back(Json(std::vector<double>(r.begin(), r.end())));
  }
  return rows;
}

Json to_json(const DtwResult& r) {
  Json path = Json::array();
  for (auto [i, j] : r.path) path.push_back(Json::array({i, j}));
  return Json{{"distance", r.distance}, {"path", std::move(path)}};
}

Json to_json(const DayMatrix& days, const MatrixProfile& profile, const Discord& discord) {
  Json rows = Json::array();
  for (std::size_t a = 0; a < days.days.size(); ++a) {
    Json row;
    row["day"] = a;
    const auto& start = days.days[a].start();
    row["start"] = start ? Json(format_timestamp(*start)) : Json(nullptr);
    row["nn_index"] = profile.nn_index[a];
    row["nn_distance"] = profile.nn_distance[a];
    rows.push_back(std::move(row));
  }
  Json d;
  d["day"] = discord.day;
  const auto& start = days.days[discord.day].start();
  d["date"] = start ? Json(format_timestamp(*start).substr(0, 10)) : Json(nullptr);
  d["nn_distance"] = discord.nn_distance;
  d["nn_index"] = profile.nn_index[discord.day];

  Json j;
  j["days"] = days.days.size();
  j["samples_per_day"] = days.samples_per_day;
  j["dropped_tail"] = days.dropped_tail;
  j["first_timestamp"] = days.first_timestamp ? Json(format_timestamp(*days.first_timestamp)) : Json(nullptr);
  j["last_timestamp"] = days.last_timestamp ? Json(format_timestamp(*days.last_timestamp)) : Json(nullptr);
  j["profile"] = std::move(rows);
  j["discord"] = std::move(d);
  return j;
}

Json to_json(const ConfusionMatrix& c) {
  const std::size_t k = c.classes().size();
  Json counts = Json::array();
  Json precision = Json::object();
  for (std::size_t t = 0; t < k; ++t) {
    std::vector<std::size_t> row(k);
    for (std::size_t p = 0; p < k; ++p) row[p] = c.count(t, p);
    counts.push_back(Json(row));
    const auto prec = c.precision(t);
    precision[c.classes()[t]] = prec ? Json(*prec) : Json(nullptr);
  }
  Json j;
  j["classes"] = c.classes();
  j["counts"] = std::move(counts);
  j["accuracy"] = c.accuracy();
  j["precision"] = std::move(precision);
  return j;
}

Json to_json(const RankedReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"rank", row.rank},
                        {"name", row.name},
                        {"distance", row.distance},
                        {"improvement", row.improvement},
                        {"worse_than_baseline", row.worse_than_baseline}});
  }
  return Json{{"baseline", r.baseline}, {"rows", std::move(rows)}};
}

Json to_json(const bench::Report& r) {
  Json timings = Json::array();
  for (const auto& t : r.timings) {
    timings.push_back(
        Json{{"measure", t.measure}, {"size", t.size}, {"repetitions", t.repetitions}, {"median_ms", t.median_ms}});
  }
  Json slopes = Json::object();
  for (const auto& s : r.slopes) slopes[s.measure] = s.value;
  return Json{{"timings", std::move(timings)}, {"loglog_slope", std::move(slopes)}};
}

}  // namespace flexdist::report
