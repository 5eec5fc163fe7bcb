#include "sostrust/hybrid/specialization.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sostrust/metrics/serialization.hpp"
#include "sostrust/random.hpp"

namespace sostrust::hybrid {

void SpecializationConfig::validate() const {
  metric.validate();
  if (agents.empty()) throw std::invalid_argument("specialization needs at least one agent");
  if (skills.empty()) throw std::invalid_argument("specialization needs at least one skill");
  if (tasks_per_skill < 1) throw std::invalid_argument("tasks_per_skill must be at least 1");
  std::set<AgentId> ids;
  for (const auto& a : agents) {
    if (!ids.insert(a.id).second) throw std::invalid_argument("duplicate agent id");
    for (const auto& [skill, p] : a.competence) {
      if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("competence for '" + skill + "' must lie in [0, 1]");
      }
    }
  }
  const auto band_ok = [](double lo, double hi) { return lo >= -1.0 && hi <= 1.0 && lo <= hi; };
  if (!band_ok(success_lo, success_hi) || !band_ok(failure_lo, failure_hi)) {
    throw std::invalid_argument("rating bands must satisfy -1 <= lo <= hi <= 1");
  }
}

SpecializationResult specialization_run(const SpecializationConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);

  std::vector<Specialist> specialists = cfg.agents;
  std::sort(specialists.begin(), specialists.end(),
            [](const Specialist& a, const Specialist& b) { return a.id < b.id; });
  SpecializationResult result;
  for (const auto& s : specialists) result.profiles.push_back(SkillProfile{s.id, {}});

  const std::size_t tasks_per_round = cfg.skills.size() * cfg.tasks_per_skill;
  const std::size_t capacity =
      cfg.capacity > 0 ? cfg.capacity : (tasks_per_round + specialists.size() - 1) / specialists.size();

  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < cfg.skills.size(); ++s)
    for (std::size_t k = 0; k < cfg.tasks_per_skill; ++k) order.push_back(s);

  std::uint64_t next_task = 0;
  for (std::size_t round = 0; round < cfg.rounds; ++round) {
    rng.shuffle(order);
    std::vector<std::size_t> load(specialists.size(), 0);
    std::vector<std::vector<std::size_t>> delegated(specialists.size(),
                                                    std::vector<std::size_t>(cfg.skills.size(), 0));
    for (std::size_t skill : order) {
      const TypedTask task{next_task++, cfg.skills[skill]};
      const auto chosen = match_task(task, result.profiles, cfg.metric, [&](const SkillProfile& p) {
        return load[static_cast<std::size_t>(&p - result.profiles.data())] < capacity;
      });
      if (!chosen) continue;
      const auto idx = static_cast<std::size_t>(
          std::find_if(specialists.begin(), specialists.end(),
                       [&](const Specialist& s) { return s.id == *chosen; }) -
          specialists.begin());
      ++load[idx];
      ++delegated[idx][skill];

      const auto it = specialists[idx].competence.find(task.required_skill);
      const double p = it == specialists[idx].competence.end() ? 0.0 : it->second;
      const double rating = rng.bernoulli(p) ? rng.uniform(cfg.success_lo, cfg.success_hi)
                                             : rng.uniform(cfg.failure_lo, cfg.failure_hi);
      result.profiles[idx] =
          record_outcome(std::move(result.profiles[idx]), task.required_skill, metrics::Rating(rating), cfg.metric);
    }
    for (std::size_t a = 0; a < specialists.size(); ++a) {
      for (std::size_t s = 0; s < cfg.skills.size(); ++s) {
        result.rows.push_back({round, specialists[a].id, cfg.skills[s],
                               result.profiles[a].trust(cfg.skills[s], cfg.metric.initial_trust).value(),
                               delegated[a][s]});
      }
    }
  }
  return result;
}

double delegated_share(const SpecializationResult& result, const std::string& skill, AgentId agent,
                       std::size_t first_round, std::size_t last_round) {
  std::size_t mine = 0;
  std::size_t total = 0;
  for (const auto& row : result.rows) {
    if (row.skill != skill || row.round < first_round || row.round > last_round) continue;
    total += row.delegated;
    if (row.agent == agent) mine += row.delegated;
  }
  return total == 0 ? 0.0 : static_cast<double>(mine) / static_cast<double>(total);
}

namespace {

std::size_t count_from_json(const nlohmann::json& j, const std::string& key) {
  if (!j.is_number_unsigned()) throw std::invalid_argument(key + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::pair<double, double> band_from_json(const nlohmann::json& j) {
  const auto v = j.get<std::vector<double>>();
  if (v.size() != 2) throw std::invalid_argument("rating band must be [lo, hi]");
  return {v[0], v[1]};
}

}  // namespace

void from_json(const nlohmann::json& j, SpecializationConfig& cfg) {
  if (!j.is_object()) throw std::invalid_argument("specialization config must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "seed") {
      cfg.seed = count_from_json(value, key);
    } else if (key == "rounds") {
      cfg.rounds = count_from_json(value, key);
    } else if (key == "skills") {
      cfg.skills = value.get<std::vector<std::string>>();
    } else if (key == "tasks_per_skill") {
      cfg.tasks_per_skill = count_from_json(value, key);
    } else if (key == "capacity") {
      cfg.capacity = count_from_json(value, key);
    } else if (key == "metric_config") {
      value.get_to(cfg.metric);
    } else if (key == "success_band") {
      std::tie(cfg.success_lo, cfg.success_hi) = band_from_json(value);
    } else if (key == "failure_band") {
      std::tie(cfg.failure_lo, cfg.failure_hi) = band_from_json(value);
    } else if (key == "agents") {
      cfg.agents.clear();
      for (const auto& a : value) {
        cfg.agents.push_back(Specialist{a.at("id").get<AgentId>(),
                                        a.value("competence", std::map<std::string, double>{})});
      }
    } else {
      throw std::invalid_argument("unknown specialization key '" + key + "'");
    }
  }
  cfg.validate();
}

void to_json(nlohmann::json& j, const SpecializationConfig& cfg) {
  auto agents = nlohmann::json::array();
  for (const auto& a : cfg.agents) agents.push_back({{"id", a.id}, {"competence", a.competence}});
  j = nlohmann::json{{"seed", cfg.seed},
                     {"rounds", cfg.rounds},
                     {"skills", cfg.skills},
                     {"tasks_per_skill", cfg.tasks_per_skill},
                     {"capacity", cfg.capacity},
                     {"metric_config", cfg.metric},
                     {"success_band", {cfg.success_lo, cfg.success_hi}},
                     {"failure_band", {cfg.failure_lo, cfg.failure_hi}},
                     {"agents", agents}};
}

}  // namespace sostrust::hybrid
