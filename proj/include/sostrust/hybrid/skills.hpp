#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "sostrust/metrics/metrics.hpp"

namespace sostrust::hybrid {

using AgentId = std::uint32_t;

/// Per-skill WSES reputation of one agent. A skill enters the map with the
/// first rated task of that type.
struct SkillProfile {
  AgentId agent = 0;
  std::map<std::string, metrics::RatingState> skills;

  /// Trust for `skill`; initial_trust when the skill was never rated.
  [[nodiscard]] metrics::TrustValue trust(const std::string& skill, double initial_trust = 0.0) const;
};

struct TypedTask {
  std::uint64_t id = 0;
  std::string required_skill;
};

/// Agent with the highest trust for the task's skill; ties go to the lower id.
/// Throws std::invalid_argument on an empty pool.
AgentId match_task(const TypedTask& task, std::span<const SkillProfile> agents,
                   const metrics::MetricConfig& cfg);

/// As above, restricted to agents accepted by `available`; nullopt if none is.
std::optional<AgentId> match_task(const TypedTask& task, std::span<const SkillProfile> agents,
                                  const metrics::MetricConfig& cfg,
                                  const std::function<bool(const SkillProfile&)>& available);

/// WSES update of the named skill only. A zero rating changes nothing.
SkillProfile record_outcome(SkillProfile profile, const std::string& skill, metrics::Rating r,
                            const metrics::MetricConfig& cfg);

}  // namespace sostrust::hybrid
