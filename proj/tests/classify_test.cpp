#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "flexdist/classify.hpp"
#include "flexdist/error.hpp"
#include "oracles.hpp"

using namespace flexdist;

namespace {

TimeSeries labeled(std::vector<double> v, std::string label) { return TimeSeries(std::move(v), 30, std::nullopt, label); }

}  // namespace

TEST(LabeledSet, RequiresLabelsAndEqualLengths) {
  EXPECT_THROW(LabeledSet({TimeSeries({1, 2})}), InvalidArgument);
  EXPECT_THROW(LabeledSet({labeled({1, 2}, "a"), labeled({1}, "b")}), LengthMismatch);
  const LabeledSet s({labeled({1}, "b"), labeled({2}, "a"), labeled({3}, "b")});
  EXPECT_EQ(s.classes(), (std::vector<std::string>{"b", "a"}));
}

TEST(Knn, ExactMatchWinsWithKOne) {
  const LabeledSet train({labeled({0, 5, 0, 0}, "x"), labeled({0, 0, 5, 0}, "y"), labeled({5, 0, 0, 0}, "z")});
  const KnnResult r = knn_classify(TimeSeries({0, 0, 5, 0}), train, 1, Measure::flexibility());
  EXPECT_EQ(r.label, "y");
  EXPECT_EQ(r.neighbors.front().index, 1u);
  EXPECT_EQ(r.neighbors.front().distance, 0.0);
}

TEST(Knn, MajorityOfFive) {
  const LabeledSet train({labeled({1}, "a"), labeled({2}, "b"), labeled({3}, "a"), labeled({4}, "b"),
                          labeled({5}, "a"), labeled({100}, "b")});
  EXPECT_EQ(knn_classify(TimeSeries({3}), train, 5, Measure::euclidean()).label, "a");
}

TEST(Knn, VoteTieGoesToSmallerSummedDistance) {
  const LabeledSet train({labeled({0}, "far"), labeled({3}, "near"), labeled({-9}, "far"), labeled({4}, "near")});
  // Two votes each; "near" sums 1 + 2, "far" sums 2 + 11.
  EXPECT_EQ(knn_classify(TimeSeries({2}), train, 4, Measure::euclidean()).label, "near");
  // Exact tie on both counts and sums falls back to class order.
  const LabeledSet sym({labeled({1}, "p"), labeled({-1}, "q")});
  EXPECT_EQ(knn_classify(TimeSeries({0}), sym, 2, Measure::euclidean()).label, "p");
}

TEST(Knn, Errors) {
  const LabeledSet train({labeled({1, 2}, "a"), labeled({2, 3}, "b")});
  EXPECT_THROW(knn_classify(TimeSeries({1, 2}), train, 3, Measure::euclidean()), KTooLarge);
  EXPECT_THROW(knn_classify(TimeSeries({1, 2, 3}), train, 1, Measure::euclidean()), LengthMismatch);
  EXPECT_THROW(knn_classify(TimeSeries({1, 2}), train, 2, Measure::euclidean(), 0), KTooLarge);
}

TEST(Knn, MatchesSortAllOracle) {
  std::mt19937_64 rng(41);
  const LabeledSet train = fixtures::shifted_pulse_set(rng, 10);
  for (const Measure& m : {Measure::euclidean(), Measure::dtw(), Measure::flexibility()}) {
    for (int q = 0; q < 30; ++q) {
      const TimeSeries query(oracle::random_values(rng, 24, 0, 4));
      std::vector<double> d;
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < train.size(); ++i) {
        d.push_back(distance(m, query, train.patterns()[i]));
        labels.push_back(train.label(i));
      }
      EXPECT_EQ(knn_classify(query, train, 5, m).label, oracle::naive_knn(d, labels, train.classes(), 5));
    }
  }
}

TEST(Knn, ScalingPreservesEdPredictions) {
  std::mt19937_64 rng(43);
  const LabeledSet train = fixtures::shifted_pulse_set(rng, 8);
  std::vector<TimeSeries> scaled;
  for (std::size_t i = 0; i < train.size(); ++i) {
    std::vector<double> v(train.patterns()[i].values().begin(), train.patterns()[i].values().end());
    for (double& x : v) x *= 4.0;
    scaled.emplace_back(std::move(v), 60, std::nullopt, train.label(i));
  }
  const LabeledSet big(std::move(scaled), train.classes());
  for (int q = 0; q < 20; ++q) {
    auto v = oracle::random_values(rng, 24, 0, 4);
    auto w = v;
    for (double& x : w) x *= 4.0;
    const KnnResult a = knn_classify(TimeSeries(v), train, 5, Measure::euclidean());
    const KnnResult b = knn_classify(TimeSeries(w), big, 5, Measure::euclidean());
    EXPECT_EQ(a.label, b.label);
    for (std::size_t n = 0; n < 5; ++n) {
      EXPECT_EQ(a.neighbors[n].index, b.neighbors[n].index);
      EXPECT_NEAR(4.0 * a.neighbors[n].distance, b.neighbors[n].distance, 1e-9);
    }
  }
}

TEST(Evaluate, SelfEvaluationIsPerfect) {
  std::mt19937_64 rng(47);
  const LabeledSet set = fixtures::shifted_pulse_set(rng, 5);
  const Evaluation e = evaluate(set, set, 1, Measure::flexibility());
  EXPECT_EQ(e.confusion.accuracy(), 1.0);
  for (std::size_t c = 0; c < 3; ++c) {
    EXPECT_EQ(e.confusion.row_sum(c), 5u);
    EXPECT_EQ(*e.confusion.precision(c), 1.0);
  }
}

TEST(Evaluate, EmptyClassGivesZeroRow) {
  const LabeledSet train({labeled({0}, "a"), labeled({10}, "b")});
  const LabeledSet test({labeled({1}, "a"), labeled({2}, "a")});
  const Evaluation e = evaluate(test, train, 1, Measure::euclidean());
  EXPECT_EQ(e.confusion.row_sum(1), 0u);
  EXPECT_FALSE(e.confusion.precision(1).has_value());
  EXPECT_EQ(e.confusion.total(), 2u);
}

TEST(Evaluate, TestOnlyLabelsAreAppended) {
  const LabeledSet train({labeled({0}, "a"), labeled({10}, "b")});
  const LabeledSet test({labeled({1}, "c")});
  const Evaluation e = evaluate(test, train, 1, Measure::euclidean());
  EXPECT_EQ(e.confusion.classes(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(e.confusion.count(2, 0), 1u);
  EXPECT_EQ(e.confusion.accuracy(), 0.0);
}

TEST(Evaluate, LeaveOneOutExcludesSelf) {
  const LabeledSet set({labeled({0}, "a"), labeled({0.1}, "a"), labeled({9}, "b"), labeled({9.2}, "b")});
  const Evaluation e = evaluate_leave_one_out(set, 1, Measure::euclidean());
  EXPECT_EQ(e.confusion.accuracy(), 1.0);
  EXPECT_THROW(evaluate_leave_one_out(set, 4, Measure::euclidean()), KTooLarge);
}

TEST(Evaluate, FdBeatsEdOnShiftedPulses) {
  std::mt19937_64 rng(2023);
  const LabeledSet train = fixtures::shifted_pulse_set(rng, 20);
  const LabeledSet test = fixtures::shifted_pulse_set(rng, 10);
  const double fd = evaluate(test, train, 5, Measure::flexibility()).confusion.accuracy();
  const double ed = evaluate(test, train, 5, Measure::euclidean()).confusion.accuracy();
  EXPECT_GT(fd, ed);
  for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(evaluate(test, train, 5, Measure::euclidean()).confusion.row_sum(c), 10u);
}
