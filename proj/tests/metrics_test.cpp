#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "sostrust/metrics/metrics.hpp"
#include "sostrust/metrics/serialization.hpp"
#include "sostrust/random.hpp"

using namespace sostrust::metrics;

namespace {

MetricConfig alpha(double a) {
  MetricConfig cfg;
  cfg.alpha = a;
  return cfg;
}

RatingHistory history(std::initializer_list<double> values) {
  RatingHistory h;
  for (double v : values) h.emplace_back(v);
  return h;
}

}  // namespace

TEST(Rating, RejectsOutOfRange) {
  EXPECT_NO_THROW(Rating(-1.0));
  EXPECT_NO_THROW(Rating(1.0));
  EXPECT_THROW(Rating(1.0000001), std::invalid_argument);
  EXPECT_THROW(Rating(-1.5), std::invalid_argument);
  EXPECT_THROW(Rating(std::nan("")), std::invalid_argument);
}

TEST(MetricConfig, Validates) {
  EXPECT_NO_THROW(MetricConfig{}.validate());
  EXPECT_THROW(alpha(0.0).validate(), std::invalid_argument);
  EXPECT_THROW(alpha(1.0).validate(), std::invalid_argument);
  MetricConfig cfg;
  cfg.storage_cap = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.initial_trust = 1.5;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(NormalizedAverage, ReproducesCounterexample) {
  const std::vector<double> a{1, 1, 1};
  const std::vector<double> b{1, 1, 1, 0.5, 0.5, 0.5};
  EXPECT_NEAR(normalized_average(a), 1.0, 1e-12);
  EXPECT_NEAR(normalized_average(b), 0.75, 1e-12);
  EXPECT_DOUBLE_EQ(normalized_average(std::vector<double>{0.5}), 0.5);
}

TEST(NormalizedAverage, EmptyIsError) {
  try {
    normalized_average({});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "no ratings");
  }
}

TEST(Wses, UpdateExamples) {
  EXPECT_EQ(wses_update({}, Rating(0), alpha(0.3)), (RatingState{0, 0}));
  const RatingState s1 = wses_update({}, Rating(1), alpha(0.9));
  EXPECT_NEAR(s1.p_pos, 0.1, 1e-15);
  EXPECT_EQ(s1.p_neg, 0.0);
  const RatingState s2 = wses_update({0.5, 0.2}, Rating(-1), alpha(0.9));
  EXPECT_NEAR(s2.p_pos, 0.45, 1e-15);
  EXPECT_NEAR(s2.p_neg, 0.28, 1e-15);
}

TEST(Wses, ZeroRatingLeavesStateUntouched) {
  const RatingState s{0.4, 0.7};
  EXPECT_EQ(wses_update(s, Rating(0), alpha(0.5)), s);
}

TEST(Wses, TrustExamples) {
  EXPECT_DOUBLE_EQ(wses_trust({0.5, 0.5}).value(), 0.0);
  EXPECT_DOUBLE_EQ(wses_trust({0.3, 0.0}).value(), 1.0);
  EXPECT_NEAR(wses_trust({0.1, 0.3}).value(), -0.5, 1e-15);
  EXPECT_DOUBLE_EQ(wses_trust({}).value(), 0.0);
  EXPECT_DOUBLE_EQ(wses_trust({}, -0.25).value(), -0.25);
}

TEST(Wses, MatchesSpreadsheetOracle) {
  sostrust::Rng rng(2024);
  for (int i = 0; i < 100; ++i) {
    const RatingState s{rng.uniform01(), rng.uniform01()};
    const double r = rng.uniform(-1, 1);
    const double a = rng.uniform(0.01, 0.99);
    const RatingState got = wses_update(s, Rating(r), alpha(a));
    const oracle::Row want = oracle::wses_row({s.p_pos, s.p_neg}, r, a);
    EXPECT_NEAR(got.p_pos, static_cast<double>(want.pos), 1e-12);
    EXPECT_NEAR(got.p_neg, static_cast<double>(want.neg), 1e-12);
    EXPECT_NEAR(wses_trust(got).value(), static_cast<double>(oracle::wses_tau(want, 0)), 1e-12);
  }
}

TEST(Wses, ClosureInUnitSquare) {
  sostrust::Rng rng(7);
  for (int i = 0; i < 200000; ++i) {
    const RatingState s{rng.uniform01(), rng.uniform01()};
    const double corner = static_cast<double>(rng.below(3)) - 1.0;  // hit -1, 0, 1 exactly
    const double r = rng.bernoulli(0.1) ? corner : rng.uniform(-1, 1);
    const RatingState n = wses_update(s, Rating(r), alpha(rng.uniform(1e-6, 1 - 1e-6)));
    ASSERT_GE(n.p_pos, 0.0);
    ASSERT_LE(n.p_pos, 1.0);
    ASSERT_GE(n.p_neg, 0.0);
    ASSERT_LE(n.p_neg, 1.0);
  }
}

TEST(Wses, TrustIsScaleInvariant) {
  sostrust::Rng rng(11);
  for (int i = 0; i < 10000; ++i) {
    const RatingState s{rng.uniform01(), rng.uniform01()};
    const double c = rng.uniform(1e-3, 1.0);
    EXPECT_NEAR(wses_trust(s).value(), wses_trust({c * s.p_pos, c * s.p_neg}).value(), 1e-12);
  }
}

TEST(Wses, PositiveStreakRisesMonotonicallyToOne) {
  const auto cfg = alpha(0.9);
  RatingState s{0.2, 0.6};
  double prev = wses_trust(s).value();
  for (int k = 0; k < 400; ++k) {
    s = wses_update(s, Rating(0.6), cfg);
    const double tau = wses_trust(s).value();
    EXPECT_GE(tau, prev);
    prev = tau;
  }
  EXPECT_GT(prev, 0.999999);
}

TEST(Wses, NegativeStreakStrictlyFalls) {
  const auto cfg = alpha(0.9);
  sostrust::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    RatingState s{rng.uniform01(), rng.uniform01()};
    double prev = wses_trust(s).value();
    for (int k = 0; k < 50; ++k) {
      s = wses_update(s, Rating(-1), cfg);
      const double tau = wses_trust(s).value();
      if (prev > -1.0 + 1e-12) {
        EXPECT_LT(tau, prev);
      }
      prev = tau;
    }
    EXPECT_LT(prev, -0.98);
  }
}

TEST(Wses, NewerRatingsWeighMore) {
  const auto cfg = alpha(0.9);
  sostrust::Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    double a = rng.uniform(-1, 1);
    double b = rng.uniform(-1, 1);
    if (a == b || a == 0 || b == 0) continue;
    const RatingState ab = wses_update(wses_update({}, Rating(a), cfg), Rating(b), cfg);
    const RatingState ba = wses_update(wses_update({}, Rating(b), cfg), Rating(a), cfg);
    EXPECT_NE(ab, ba);
    // Same-sign pairs both report +-1, so trust can only differ on mixed signs.
    if (a * b < 0) {
      EXPECT_NE(wses_trust(ab).value(), wses_trust(ba).value());
    }
  }
}

TEST(Continuous, Examples) {
  EXPECT_DOUBLE_EQ(continuous_trust(history({1, 1})).value(), 1.0);
  EXPECT_DOUBLE_EQ(continuous_trust(history({1, -1})).value(), 0.0);
  EXPECT_DOUBLE_EQ(continuous_trust(RatingHistory{}, 0.2).value(), 0.2);
  const RatingHistory h = continuous_update(history({1, 1, 1}), Rating(0.5));
  EXPECT_DOUBLE_EQ(continuous_trust(history({1, 1, 1})).value(), 1.0);
  EXPECT_DOUBLE_EQ(continuous_trust(h).value(), 0.875);
}

TEST(Continuous, RunningFormMatchesHistoryForm) {
  sostrust::Rng rng(17);
  RatingHistory h;
  ContinuousState s;
  for (int i = 0; i < 1000; ++i) {
    const Rating r(rng.uniform(-1, 1));
    h = continuous_update(std::move(h), r);
    s = continuous_update(s, r);
    ASSERT_NEAR(continuous_trust(h).value(), continuous_trust(s).value(), 1e-12);
  }
}

TEST(Weighted, Examples) {
  MetricConfig cfg;
  cfg.storage_cap = 10;
  EXPECT_DOUBLE_EQ(Metric::from_history(MetricKind::weighted, cfg, history({1, 1})).trust().value(), 1.0);
  EXPECT_DOUBLE_EQ(Metric::from_history(MetricKind::weighted, cfg, history({1, -1})).trust().value(), 0.0);
}

TEST(Weighted, EvictionAtCapLowersTrust) {
  MetricConfig cfg;
  cfg.storage_cap = 3;
  WeightedState s;
  for (double v : {1.0, 1.0, -1.0}) s = weighted_update(std::move(s), Rating(v), cfg);
  EXPECT_NEAR(weighted_trust(s).value(), 1.0 / 3.0, 1e-15);
  s = weighted_update(std::move(s), Rating(0.5), cfg);
  ASSERT_EQ(s.stored.size(), 3u);
  EXPECT_DOUBLE_EQ(s.stored.front(), 1.0);
  EXPECT_DOUBLE_EQ(s.mass.p_pos, 1.5);
  EXPECT_DOUBLE_EQ(s.mass.p_neg, 1.0);
  EXPECT_NEAR(weighted_trust(s).value(), 0.2, 1e-15);
}

TEST(Weighted, AllPositiveWindowStaysAtOne) {
  MetricConfig cfg;
  cfg.storage_cap = 3;
  WeightedState s;
  for (double v : {1.0, 1.0, 1.0, 0.5}) s = weighted_update(std::move(s), Rating(v), cfg);
  EXPECT_DOUBLE_EQ(weighted_trust(s).value(), 1.0);
}

TEST(Metric, ParsesKinds) {
  EXPECT_EQ(parse_metric_kind("wses"), MetricKind::wses);
  EXPECT_EQ(to_string(parse_metric_kind("weighted")), "weighted");
  EXPECT_THROW(parse_metric_kind("binary"), std::invalid_argument);
}

TEST(Metric, WsesStateMustBeInUnitSquare) {
  EXPECT_THROW(Metric::from_wses_state({}, {1.5, 0}), std::invalid_argument);
  EXPECT_EQ(Metric::from_wses_state({}, {0.3, 0}).trust().value(), 1.0);
}

TEST(Serialization, RatingStateJson) {
  const nlohmann::json j = RatingState{0.25, 0.5};
  EXPECT_EQ(j.dump(), R"({"p_neg":0.5,"p_pos":0.25})");
  EXPECT_EQ(j.get<RatingState>(), (RatingState{0.25, 0.5}));
  EXPECT_THROW((nlohmann::json{{"p_pos", -1}, {"p_neg", 0}}.get<RatingState>()), std::invalid_argument);
}
