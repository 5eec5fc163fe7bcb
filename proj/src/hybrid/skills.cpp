#include "sostrust/hybrid/skills.hpp"

#include <stdexcept>

namespace sostrust::hybrid {

metrics::TrustValue SkillProfile::trust(const std::string& skill, double initial_trust) const {
  const auto it = skills.find(skill);
  if (it == skills.end()) return metrics::TrustValue(initial_trust);
  return metrics::wses_trust(it->second, initial_trust);
}

std::optional<AgentId> match_task(const TypedTask& task, std::span<const SkillProfile> agents,
                                  const metrics::MetricConfig& cfg,
                                  const std::function<bool(const SkillProfile&)>& available) {
  const SkillProfile* best = nullptr;
  double best_trust = 0.0;
  for (const SkillProfile& p : agents) {
    if (!available(p)) continue;
    const double t = p.trust(task.required_skill, cfg.initial_trust).value();
    if (best == nullptr || t > best_trust || (t == best_trust && p.agent < best->agent)) {
      best = &p;
      best_trust = t;
    }
  }
  if (best == nullptr) return std::nullopt;
  return best->agent;
}

AgentId match_task(const TypedTask& task, std::span<const SkillProfile> agents,
                   const metrics::MetricConfig& cfg) {
  if (agents.empty()) {
    throw std::invalid_argument("match_task needs at least one agent");
  }
  return *match_task(task, agents, cfg, [](const SkillProfile&) { return true; });
}

SkillProfile record_outcome(SkillProfile profile, const std::string& skill, metrics::Rating r,
                            const metrics::MetricConfig& cfg) {
  if (r.value() == 0.0) return profile;
  auto& state = profile.skills[skill];
  state = metrics::wses_update(state, r, cfg);
  return profile;
}

}  // namespace sostrust::hybrid
