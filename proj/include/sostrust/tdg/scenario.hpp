#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include <json.hpp>

#include "sostrust/metrics/metrics.hpp"

namespace sostrust::tdg {

enum class Behavior { adaptive, egoistic };

std::string_view to_string(Behavior behavior);

/// Closed interval ratings are drawn from, uniformly.
struct RatingBand {
  double lo = 0.0;
  double hi = 0.0;
};

/// Declarative description of one grid run. Defaults are the desk-scale
/// attack scenario: 20 adaptive agents, 20 egoists joining at tick 2000,
/// 6000 ticks in total.
struct ScenarioConfig {
  std::uint64_t seed = 1;
  metrics::MetricKind metric = metrics::MetricKind::wses;
  metrics::MetricConfig metric_config;
  std::size_t initial_benevolent = 20;
  std::size_t initial_egoistic = 0;
  std::uint64_t attack_tick = 2000;
  std::size_t attacker_count = 20;
  std::uint64_t total_ticks = 6000;
  std::size_t tasks_per_tick = 30;
  std::size_t worker_capacity = 1;  // tasks one agent can process per tick
  double isolation_threshold = 0.0;
  RatingBand adaptive_band{0.7, 1.0};
  RatingBand egoistic_band{-1.0, -0.5};

  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

// JSON mirror of ScenarioConfig. Missing keys keep their defaults; unknown
// keys are rejected.
//   {"seed": 1, "metric": "wses",
//    "metric_config": {"alpha": 0.9, "storage_cap": 100, "initial_trust": 0},
//    "initial_benevolent": 20, "initial_egoistic": 0, "attack_tick": 2000,
//    "attacker_count": 20, "total_ticks": 6000, "tasks_per_tick": 30,
//    "worker_capacity": 1, "isolation_threshold": 0,
//    "rating_noise": {"adaptive": [0.7, 1.0], "egoistic": [-1.0, -0.5]}}
void to_json(nlohmann::json& j, const ScenarioConfig& cfg);
void from_json(const nlohmann::json& j, ScenarioConfig& cfg);

}  // namespace sostrust::tdg
