#include "sostrust/tdg/grid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sostrust::tdg {

namespace {

void join(GridState& state, const ScenarioConfig& cfg, Behavior behavior, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    const auto id = static_cast<AgentId>(state.agents.size());
    state.agents.push_back(Agent{id, behavior, metrics::Metric(cfg.metric, cfg.metric_config), state.tick});
    state.reputation.push_back(state.agents.back().metric.trust().value());
  }
  state.delegated.resize(state.agents.size(), 0);
}

void log_tick(GridState& state) {
  for (Behavior type : {Behavior::adaptive, Behavior::egoistic}) {
    double sum = 0.0;
    std::size_t population = 0;
    for (const Agent& a : state.agents) {
      if (a.behavior != type) continue;
      sum += state.reputation[a.id];
      ++population;
    }
    if (population > 0) {
      state.series.push_back({state.tick, type, sum / static_cast<double>(population), population});
    }
  }
}

}  // namespace

GridState initial_state(const ScenarioConfig& cfg) {
  cfg.validate();
  GridState state(cfg.seed);
  join(state, cfg, Behavior::adaptive, cfg.initial_benevolent);
  join(state, cfg, Behavior::egoistic, cfg.initial_egoistic);
  if (cfg.attack_tick == 0) {
    join(state, cfg, Behavior::egoistic, cfg.attacker_count);
  }
  log_tick(state);
  return state;
}

GridState step(GridState state, const ScenarioConfig& cfg) {
  if (state.tick >= cfg.total_ticks) {
    throw std::logic_error("scenario complete");
  }
  const std::size_t n = state.agents.size();

  std::vector<AgentId> ranking(n);
  std::iota(ranking.begin(), ranking.end(), AgentId{0});
  std::sort(ranking.begin(), ranking.end(), [&](AgentId a, AgentId b) {
    if (state.reputation[a] != state.reputation[b]) return state.reputation[a] > state.reputation[b];
    return a < b;
  });
  // Isolated agents sit at the tail of the ranking.
  const auto eligible_end = static_cast<std::size_t>(
      std::find_if(ranking.begin(), ranking.end(),
                   [&](AgentId a) { return state.reputation[a] < cfg.isolation_threshold; }) -
      ranking.begin());

  std::fill(state.delegated.begin(), state.delegated.end(), 0);
  state.tasks.clear();
  if (n > 0) {
    std::size_t cursor = 0;  // first ranked agent that may still have capacity
    for (std::size_t k = 0; k < cfg.tasks_per_tick; ++k) {
      Task task;
      task.id = state.next_task_id++;
      task.submitter = static_cast<AgentId>(state.rng.below(n));
      while (cursor < eligible_end && state.delegated[ranking[cursor]] >= cfg.worker_capacity) {
        ++cursor;
      }
      for (std::size_t i = cursor; i < eligible_end; ++i) {
        const AgentId candidate = ranking[i];
        if (candidate == task.submitter || state.delegated[candidate] >= cfg.worker_capacity) continue;
        task.assignee = candidate;
        ++state.delegated[candidate];
        break;
      }
      state.tasks.push_back(task);
    }
  }

  for (Task& task : state.tasks) {
    if (!task.assignee) continue;
    Agent& worker = state.agents[*task.assignee];
    const RatingBand& band =
        worker.behavior == Behavior::adaptive ? cfg.adaptive_band : cfg.egoistic_band;
    task.rating = state.rng.uniform(band.lo, band.hi);
    worker.metric.update(metrics::Rating(*task.rating));
  }
  for (const Task& task : state.tasks) {
    if (task.assignee) {
      state.reputation[*task.assignee] = state.agents[*task.assignee].metric.trust().value();
    }
  }

  ++state.tick;
  if (state.tick == cfg.attack_tick) {
    join(state, cfg, Behavior::egoistic, cfg.attacker_count);
  }
  log_tick(state);
  return state;
}

std::vector<TypeSummary> summarize(const std::vector<SeriesRow>& series, std::uint64_t attack_tick) {
  std::vector<TypeSummary> out;
  for (Behavior type : {Behavior::adaptive, Behavior::egoistic}) {
    TypeSummary s{type, 0.0, 0.0, std::nullopt};
    std::size_t rows = 0;
    for (const SeriesRow& row : series) {
      if (row.type != type) continue;
      s.mean_reputation_final = row.mean_reputation;
      s.mean_reputation_overall += row.mean_reputation;
      ++rows;
      if (!s.crossed_below_half_at && row.tick >= attack_tick && row.mean_reputation < -0.5) {
        s.crossed_below_half_at = row.tick;
      }
    }
    if (rows == 0) continue;
    s.mean_reputation_overall /= static_cast<double>(rows);
    out.push_back(s);
  }
  return out;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  GridState state = initial_state(cfg);
  while (state.tick < cfg.total_ticks) {
    state = step(std::move(state), cfg);
  }
  auto summary = summarize(state.series, cfg.attack_tick);
  return {cfg.metric, std::move(state.series), std::move(summary)};
}

}  // namespace sostrust::tdg
