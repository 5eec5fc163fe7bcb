#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sostrust/metrics/metrics.hpp"
#include "sostrust/random.hpp"
#include "sostrust/tdg/scenario.hpp"

namespace sostrust::tdg {

using AgentId = std::uint32_t;

struct Agent {
  AgentId id;
  Behavior behavior;
  metrics::Metric metric;
  std::uint64_t joined_at;
};

/// One work unit. Delegated to at most one worker within the tick it was
/// spawned in; a task without an assignee expired.
struct Task {
  std::uint64_t id = 0;
  AgentId submitter = 0;
  std::optional<AgentId> assignee;
  std::optional<double> rating;
};

struct SeriesRow {
  std::uint64_t tick;
  Behavior type;
  double mean_reputation;
  std::size_t population;
};

struct GridState {
  explicit GridState(std::uint64_t seed) : rng(seed) {}

  std::uint64_t tick = 0;
  std::vector<Agent> agents;           // index == id
  std::vector<double> reputation;      // ledger, index == id
  std::vector<Task> tasks;             // work of the last completed tick
  std::vector<std::size_t> delegated;  // tasks each agent received in the last tick
  std::vector<SeriesRow> series;       // append-only
  std::uint64_t next_task_id = 0;
  Rng rng;
};

/// Initial population, logged as tick 0.
GridState initial_state(const ScenarioConfig& cfg);

/// Advances one tick:
///  1. spawn tasks_per_tick tasks from uniformly drawn submitters (isolated
///     agents still submit);
///  2. delegate each task to the non-isolated agent with the best reputation
///     at the start of the tick that is not its submitter and has spare
///     capacity, ties to the lower id; tasks nobody can take expire;
///  3. the worker's behaviour determines the rating drawn from its band;
///  4. the rating is folded into the worker's metric;
///  5. when the new tick equals attack_tick, the egoistic attackers join;
///  6. the mean reputation of every present agent type is logged.
/// Throws std::logic_error("scenario complete") once total_ticks are done.
GridState step(GridState state, const ScenarioConfig& cfg);

struct TypeSummary {
  Behavior type;
  double mean_reputation_final = 0.0;
  double mean_reputation_overall = 0.0;
  /// First tick at or after the attack where the type's mean fell below -0.5.
  std::optional<std::uint64_t> crossed_below_half_at;
};

struct ScenarioResult {
  metrics::MetricKind metric;
  std::vector<SeriesRow> series;
  std::vector<TypeSummary> summary;
};

ScenarioResult run_scenario(const ScenarioConfig& cfg);

std::vector<TypeSummary> summarize(const std::vector<SeriesRow>& series, std::uint64_t attack_tick);

}  // namespace sostrust::tdg
