#include <gtest/gtest.h>

#include <sstream>

#include "sostrust/tdg/grid.hpp"
#include "sostrust/tdg/io.hpp"

using namespace sostrust::tdg;
using sostrust::metrics::MetricKind;

namespace {

ScenarioConfig small(std::uint64_t seed = 1) {
  ScenarioConfig cfg;
  cfg.seed = seed;
  cfg.initial_benevolent = 8;
  cfg.attacker_count = 6;
  cfg.attack_tick = 100;
  cfg.total_ticks = 300;
  cfg.tasks_per_tick = 12;
  return cfg;
}

std::string csv(const ScenarioResult& r) {
  std::ostringstream s;
  write_series_csv(s, r.series);
  return s.str();
}

}  // namespace

TEST(Grid, ZeroTicksLogsInitialEntries) {
  ScenarioConfig cfg = small();
  cfg.total_ticks = 0;
  cfg.attacker_count = 0;
  const auto r = run_scenario(cfg);
  ASSERT_EQ(r.series.size(), 1u);
  EXPECT_EQ(r.series[0].tick, 0u);
  EXPECT_EQ(r.series[0].mean_reputation, cfg.metric_config.initial_trust);
  EXPECT_EQ(r.series[0].population, 8u);
}

TEST(Grid, SteppingFinishedScenarioFails) {
  ScenarioConfig cfg = small();
  cfg.total_ticks = 1;
  cfg.attacker_count = 0;
  auto state = step(initial_state(cfg), cfg);
  try {
    state = step(std::move(state), cfg);
    FAIL();
  } catch (const std::logic_error& e) {
    EXPECT_STREQ(e.what(), "scenario complete");
  }
}

TEST(Grid, PopulationConservation) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    ScenarioConfig cfg = small(seed);
    auto state = initial_state(cfg);
    std::size_t previous = state.agents.size();
    while (state.tick < cfg.total_ticks) {
      state = step(std::move(state), cfg);
      const std::size_t now = state.agents.size();
      if (state.tick == cfg.attack_tick) {
        EXPECT_EQ(now, previous + cfg.attacker_count);
      } else {
        EXPECT_EQ(now, previous);
      }
      previous = now;
    }
  }
}

TEST(Grid, NoAttackKeepsPopulationConstant) {
  ScenarioConfig cfg = small();
  cfg.attacker_count = 0;
  for (const auto& row : run_scenario(cfg).series) {
    EXPECT_EQ(row.type, Behavior::adaptive);
    EXPECT_EQ(row.population, 8u);
  }
}

TEST(Grid, IsolatedAgentsGetNoWork) {
  for (double theta : {0.0, -0.3, 0.5}) {
    ScenarioConfig cfg = small(3);
    cfg.isolation_threshold = theta;
    cfg.initial_egoistic = 3;
    auto state = initial_state(cfg);
    while (state.tick < cfg.total_ticks) {
      const auto before = state.reputation;
      state = step(std::move(state), cfg);
      for (std::size_t id = 0; id < before.size(); ++id) {
        if (before[id] < theta) {
          EXPECT_EQ(state.delegated[id], 0u) << "tick " << state.tick;
        }
      }
      for (const Task& t : state.tasks) {
        if (t.assignee) {
          EXPECT_NE(*t.assignee, t.submitter);
          EXPECT_LE(state.delegated[*t.assignee], cfg.worker_capacity);
        }
      }
    }
  }
}

TEST(Grid, IsolatedAgentsStillSubmit) {
  ScenarioConfig cfg = small(4);
  auto state = initial_state(cfg);
  bool egoist_submitted_while_isolated = false;
  while (state.tick < cfg.total_ticks) {
    const auto before = state.reputation;
    state = step(std::move(state), cfg);
    for (const Task& t : state.tasks) {
      if (t.submitter < before.size() && before[t.submitter] < cfg.isolation_threshold) {
        egoist_submitted_while_isolated = true;
      }
    }
  }
  EXPECT_TRUE(egoist_submitted_while_isolated);
}

TEST(Grid, BoundedMeans) {
  for (auto kind : {MetricKind::continuous, MetricKind::weighted, MetricKind::wses}) {
    ScenarioConfig cfg = small(9);
    cfg.metric = kind;
    cfg.metric_config.storage_cap = 10;
    for (const auto& row : run_scenario(cfg).series) {
      EXPECT_GE(row.mean_reputation, -1.0);
      EXPECT_LE(row.mean_reputation, 1.0);
    }
  }
}

TEST(Grid, Deterministic) {
  for (auto kind : {MetricKind::continuous, MetricKind::weighted, MetricKind::wses}) {
    ScenarioConfig cfg = small(21);
    cfg.metric = kind;
    EXPECT_EQ(csv(run_scenario(cfg)), csv(run_scenario(cfg)));
  }
  ScenarioConfig a = small(1), b = small(2);
  a.metric = b.metric = MetricKind::continuous;
  EXPECT_NE(csv(run_scenario(a)), csv(run_scenario(b)));
}

TEST(Grid, AdaptivePlateauWithoutAttack) {
  ScenarioConfig cfg;
  cfg.attacker_count = 0;
  cfg.total_ticks = 2000;
  const auto r = run_scenario(cfg);
  EXPECT_GE(r.summary.at(0).mean_reputation_final, 0.8);
}

TEST(Grid, WsesAttackersFallMonotonically) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    ScenarioConfig cfg = small(seed);
    const auto r = run_scenario(cfg);
    double previous = 2.0;
    for (const auto& row : r.series) {
      if (row.type != Behavior::egoistic) continue;
      EXPECT_LE(row.mean_reputation, previous) << "tick " << row.tick;
      previous = row.mean_reputation;
      if (row.mean_reputation < -0.5) break;
    }
    EXPECT_LE(r.summary.at(1).mean_reputation_final, -0.5);
    ASSERT_TRUE(r.summary.at(1).crossed_below_half_at.has_value());
  }
}

TEST(Grid, AttackersAtStartJoinImmediately) {
  ScenarioConfig cfg = small();
  cfg.attack_tick = 0;
  const auto state = initial_state(cfg);
  EXPECT_EQ(state.agents.size(), 14u);
  EXPECT_EQ(state.series.size(), 2u);
}

TEST(ScenarioJson, StrictAndRoundTrips) {
  ScenarioConfig cfg = small();
  nlohmann::json j = cfg;
  const auto back = j.get<ScenarioConfig>();
  EXPECT_EQ(nlohmann::json(back), j);
  j["bogus"] = 1;
  EXPECT_ANY_THROW(j.get<ScenarioConfig>());
  nlohmann::json neg = cfg;
  neg["attacker_count"] = -1;
  EXPECT_ANY_THROW(neg.get<ScenarioConfig>());
  nlohmann::json late = cfg;
  late["attack_tick"] = 300;
  EXPECT_ANY_THROW(late.get<ScenarioConfig>());
}

TEST(SeriesCsv, Header) {
  ScenarioConfig cfg = small();
  cfg.total_ticks = 0;
  cfg.attacker_count = 0;
  EXPECT_EQ(csv(run_scenario(cfg)), "tick,agent_type,mean_reputation,population\n0,adaptive,0,8\n");
}
