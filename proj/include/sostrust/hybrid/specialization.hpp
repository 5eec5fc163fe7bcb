#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "sostrust/hybrid/skills.hpp"
#include "sostrust/metrics/rating.hpp"

namespace sostrust::hybrid {

/// Hidden ability of one agent: probability of doing a task of each skill
/// well. Skills not listed are always done badly.
struct Specialist {
  AgentId id = 0;
  std::map<std::string, double> competence;
};

struct SpecializationConfig {
  std::uint64_t seed = 1;
  std::size_t rounds = 500;
  std::vector<std::string> skills{"integration", "matrix-multiplication"};
  std::vector<Specialist> agents;
  std::size_t tasks_per_skill = 1;
  /// Tasks one agent takes per round; 0 spreads the round's tasks evenly,
  /// i.e. ceil(tasks / agents).
  std::size_t capacity = 0;
  metrics::MetricConfig metric;
  double success_lo = 0.7;
  double success_hi = 1.0;
  double failure_lo = -1.0;
  double failure_hi = -0.5;

  void validate() const;
};

struct SpecializationRow {
  std::size_t round;
  AgentId agent;
  std::string skill;
  double tau;
  std::size_t delegated;
};

struct SpecializationResult {
  std::vector<SpecializationRow> rows;  // round-major, then agent, then skill
  std::vector<SkillProfile> profiles;   // final state, ordered by agent id
};

/// Closed loop per round: the round's tasks (tasks_per_skill of every skill)
/// come in a shuffled order; each goes to the best-matching agent with spare
/// capacity, whose hidden competence decides between a success rating and a
/// failure rating, which is recorded on that skill right away.
SpecializationResult specialization_run(const SpecializationConfig& cfg);

/// Share of `skill` tasks delegated to `agent` over rounds [first, last].
double delegated_share(const SpecializationResult& result, const std::string& skill, AgentId agent,
                       std::size_t first_round, std::size_t last_round);

// {"seed", "rounds", "skills", "tasks_per_skill", "capacity", "metric_config",
//  "success_band": [lo, hi], "failure_band": [lo, hi],
//  "agents": [{"id": int, "competence": {skill: p}}]}
void from_json(const nlohmann::json& j, SpecializationConfig& cfg);
void to_json(nlohmann::json& j, const SpecializationConfig& cfg);

}  // namespace sostrust::hybrid
