#include <gtest/gtest.h>

#include <stdexcept>

#include "sostrust/metrics/requirements.hpp"
#include "sostrust/random.hpp"

using namespace sostrust::metrics;

namespace {

RatingHistory history(std::initializer_list<double> values) {
  RatingHistory h;
  for (double v : values) h.emplace_back(v);
  return h;
}

Metric continuous(std::initializer_list<double> values) {
  return Metric::from_history(MetricKind::continuous, {}, history(values));
}

}  // namespace

TEST(CheckR1, RejectsBadPreconditions) {
  const Metric m(MetricKind::wses, {});
  EXPECT_THROW(check_r1(m, Rating(0.5), Rating(0.5)), std::invalid_argument);
  EXPECT_THROW(check_r1(m, Rating(0.4), Rating(0.5)), std::invalid_argument);
  EXPECT_THROW(check_r1(m, Rating(0.5), Rating(-0.5)), std::invalid_argument);
}

TEST(CheckR2, RejectsNonPositiveRating) {
  const Metric m(MetricKind::wses, {});
  EXPECT_THROW(check_r2(m, Rating(0.0)), std::invalid_argument);
  EXPECT_THROW(check_r2(m, Rating(-0.3)), std::invalid_argument);
}

TEST(CheckR1, WsesRandomStatesPass) {
  sostrust::Rng rng(99);
  for (int i = 0; i < 20000; ++i) {
    const Metric m = Metric::from_wses_state({}, {rng.uniform01(), rng.uniform01()});
    EXPECT_FALSE(check_r1(m, Rating(0.9), Rating(0.4)).has_value()) << m.describe();
  }
}

TEST(CheckR2, WsesMaximumIsVacuousPass) {
  const Metric m = Metric::from_wses_state({}, {0.4, 0.0});
  ASSERT_EQ(m.trust().value(), 1.0);
  EXPECT_FALSE(check_r2(m, Rating(0.1)).has_value());
}

TEST(CheckR2, ContinuousSaturatedHistoryIsVacuous) {
  // (1,1,1) + 0.5 drops the mean from 1 to 0.875, but trust was already at
  // its maximum, which R2 exempts.
  const Metric m = continuous({1, 1, 1});
  EXPECT_DOUBLE_EQ(m.updated(Rating(0.5)).trust().value(), 0.875);
  EXPECT_FALSE(check_r2(m, Rating(0.5)).has_value());
}

TEST(CheckR2, ContinuousBelowMeanIsWitness) {
  const auto w = check_r2(continuous({1, 0}), Rating(0.4));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->requirement, Requirement::r2);
  EXPECT_DOUBLE_EQ(w->trust_low, 0.5);
  EXPECT_NEAR(w->trust_high, 1.4 / 3.0, 1e-15);
}

TEST(CheckR1, ContinuousExhaustiveSmallHistoriesPass) {
  // R1 holds for a running mean: the larger rating always gives the larger mean.
  const double grid[] = {-1, -0.5, 0, 0.5, 1};
  for (double a : grid)
    for (double b : grid)
      for (double c : grid) {
        const Metric m = continuous({a, b, c});
        for (double hi : {0.25, 0.5, 0.75, 1.0}) {
          for (double lo : {0.25, 0.5, 0.75, 1.0}) {
            if (hi > lo) {
              EXPECT_FALSE(check_r1(m, Rating(hi), Rating(lo)).has_value());
            }
          }
        }
      }
}

TEST(CheckR2, WeightedWitnessOnlyAtCapacity) {
  MetricConfig cfg;
  cfg.storage_cap = 3;
  const Metric below = Metric::from_history(MetricKind::weighted, cfg, history({1, -1}));
  EXPECT_FALSE(below.at_capacity());
  EXPECT_FALSE(check_r2(below, Rating(0.5)).has_value());

  const Metric full = Metric::from_history(MetricKind::weighted, cfg, history({1, 1, -1}));
  EXPECT_TRUE(full.at_capacity());
  const auto w = check_r2(full, Rating(0.5));
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->at_capacity);
}

TEST(CheckR2, SlackAbsorbsTies) {
  MetricConfig cfg;
  cfg.storage_cap = 2;
  // Evicting 0.5 and adding 0.5 leaves trust unchanged: not a witness under the slack rule.
  const Metric m = Metric::from_history(MetricKind::weighted, cfg, history({0.5, -1}));
  EXPECT_FALSE(check_r2(m, Rating(0.5)).has_value());
}

TEST(Suite, WsesHasNoWitnesses) {
  SuiteConfig cfg;
  cfg.trials = 20000;
  const auto report = run_requirement_suite(MetricKind::wses, cfg);
  EXPECT_EQ(report.r1_witnesses, 0u);
  EXPECT_EQ(report.r2_witnesses, 0u);
  EXPECT_TRUE(report.samples.empty());
}

TEST(Suite, ContinuousFindsR2Witness) {
  SuiteConfig cfg;
  cfg.trials = 2000;
  const auto report = run_requirement_suite(MetricKind::continuous, cfg);
  EXPECT_GT(report.r2_witnesses, 0u);
  EXPECT_EQ(report.r1_witnesses, 0u);
  ASSERT_FALSE(report.samples.empty());
  EXPECT_FALSE(report.samples.front().base_history.empty());
}

TEST(Suite, WeightedWitnessesSplitByCapacity) {
  SuiteConfig cfg;
  cfg.trials = 20000;
  cfg.metric.storage_cap = 5;
  const auto report = run_requirement_suite(MetricKind::weighted, cfg);
  EXPECT_GT(report.trials_at_cap, 0u);
  EXPECT_GT(report.witnesses_at_cap, 0u);
  EXPECT_EQ(report.witnesses_below_cap, 0u);
}

TEST(Suite, DeterministicInSeed) {
  SuiteConfig cfg;
  cfg.trials = 3000;
  const auto a = run_requirement_suite(MetricKind::continuous, cfg);
  const auto b = run_requirement_suite(MetricKind::continuous, cfg);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  EXPECT_EQ(a.r2_witnesses, b.r2_witnesses);
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    EXPECT_EQ(a.samples[i].base, b.samples[i].base);
    EXPECT_EQ(a.samples[i].rating_high, b.samples[i].rating_high);
  }
}

TEST(Suite, ZeroTrialsRejected) {
  SuiteConfig cfg;
  cfg.trials = 0;
  EXPECT_THROW(run_requirement_suite(MetricKind::wses, cfg), std::invalid_argument);
}
