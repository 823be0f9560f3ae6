#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "flexdist/error.hpp"
#include "flexdist/schedule.hpp"

using namespace flexdist;

namespace {

const RankedRow& row(const RankedReport& r, const std::string& name) {
  return *std::find_if(r.rows.begin(), r.rows.end(), [&](const RankedRow& x) { return x.name == name; });
}

}  // namespace

TEST(RankScenarios, IdealAndOriginalCopies) {
  const fixtures::TwoPulse f;
  const ScenarioSet set(TimeSeries(f.original), TimeSeries(f.ideal),
                        {{"same_as_original", TimeSeries(f.original)}, {"same_as_ideal", TimeSeries(f.ideal)}});
  for (const Measure& m : {Measure::euclidean(), Measure::dtw(), Measure::flexibility()}) {
    const RankedReport r = rank_scenarios(set, m);
    EXPECT_EQ(r.rows.front().name, "same_as_ideal");
    EXPECT_EQ(r.rows.front().distance, 0.0);
    EXPECT_EQ(r.rows.front().rank, 1u);
    EXPECT_EQ(row(r, "same_as_original").distance, r.baseline);
    EXPECT_EQ(row(r, "same_as_original").improvement, 0.0);
  }
}

TEST(RankScenarios, EdTiesWhereFdPrefersTheRightShift) {
  const ScenarioSet set = fixtures::TwoPulse{}.scenario_set();

  const RankedReport ed = rank_scenarios(set, Measure::euclidean());
  for (const auto& r : ed.rows) {
    EXPECT_EQ(r.distance, std::sqrt(50.0));
    EXPECT_EQ(r.rank, 1u);
  }
  // Tied rows are listed by name.
  EXPECT_EQ(ed.rows[0].name, "toward_ideal");
  EXPECT_EQ(ed.rows[1].name, "wrong_direction");
  EXPECT_EQ(ed.rows[2].name, "wrong_pulse");

  // Frozen from the exhaustive subset-DP assignment oracle (T = 5/24 per slot).
  const RankedReport fd = rank_scenarios(set, Measure::flexibility());
  EXPECT_NEAR(fd.baseline, 10.0 / 3.0, 1e-9);
  EXPECT_NEAR(row(fd, "toward_ideal").distance, 5.0 / 3.0, 1e-9);
  EXPECT_NEAR(row(fd, "wrong_pulse").distance, 5.0, 1e-9);
  EXPECT_NEAR(row(fd, "wrong_direction").distance, 5.0, 1e-9);
  EXPECT_EQ(fd.rows[0].name, "toward_ideal");
  EXPECT_EQ(fd.rows[0].rank, 1u);
  EXPECT_EQ(fd.rows[1].rank, 2u);
  EXPECT_EQ(fd.rows[2].rank, 2u);
  EXPECT_TRUE(row(fd, "wrong_pulse").worse_than_baseline);
  EXPECT_LT(row(fd, "wrong_pulse").improvement, 0.0);
  EXPECT_FALSE(row(fd, "toward_ideal").worse_than_baseline);
}

TEST(RankScenarios, RanksAreCompetitionRanks) {
  const ScenarioSet set(TimeSeries({0, 0}), TimeSeries({0, 0}),
                        {{"c", TimeSeries({1, 0})}, {"a", TimeSeries({0, 3})}, {"b", TimeSeries({0, 1})},
                         {"d", TimeSeries({2, 0})}});
  const RankedReport r = rank_scenarios(set, Measure::euclidean());
  std::vector<std::string> names;
  std::vector<std::size_t> ranks;
  for (const auto& x : r.rows) names.push_back(x.name), ranks.push_back(x.rank);
  EXPECT_EQ(names, (std::vector<std::string>{"b", "c", "d", "a"}));
  EXPECT_EQ(ranks, (std::vector<std::size_t>{1, 1, 3, 4}));
}

TEST(RankScenarios, RejectsMismatchedLengths) {
  EXPECT_THROW(ScenarioSet(TimeSeries({1, 2}), TimeSeries({1, 2}), {{"s", TimeSeries({1})}}), LengthMismatch);
}
