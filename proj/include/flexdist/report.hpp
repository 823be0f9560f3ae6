#pragma once

#include <json.hpp>

#include "flexdist/bench.hpp"
#include "flexdist/classify.hpp"
#include "flexdist/discord.hpp"
#include "flexdist/metrics.hpp"
#include "flexdist/reshaping.hpp"
#include "flexdist/schedule.hpp"

// JSON projections of result types. Every index in these documents is
// 0-based.
namespace flexdist::report {

using Json = nlohmann::ordered_json;

Json to_json(const FdWeights& w);
Json to_json(const Measure& m);
Json to_json(const Move& m);
Json to_json(const ReshapePlan& p);
Json to_json(const CostMatrix& c);
Json to_json(const DtwResult& r);
Json to_json(const DayMatrix& days, const MatrixProfile& profile, const Discord& discord);
Json to_json(const ConfusionMatrix& c);
Json to_json(const RankedReport& r);
Json to_json(const bench::Report& r);

}  // namespace flexdist::report
