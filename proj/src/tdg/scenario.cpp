#include "sostrust/tdg/scenario.hpp"

#include <stdexcept>
#include <string>

#include "sostrust/metrics/serialization.hpp"

namespace sostrust::tdg {

std::string_view to_string(Behavior behavior) {
  return behavior == Behavior::adaptive ? "adaptive" : "egoistic";
}

namespace {

void check_band(const RatingBand& band, const char* name) {
  if (!(band.lo >= -1.0 && band.hi <= 1.0 && band.lo <= band.hi)) {
    throw std::invalid_argument(std::string(name) + " rating band must satisfy -1 <= lo <= hi <= 1");
  }
}

RatingBand band_from_json(const nlohmann::json& j) {
  const auto pair = j.get<std::vector<double>>();
  if (pair.size() != 2) {
    throw std::invalid_argument("rating band must be [lo, hi]");
  }
  return {pair[0], pair[1]};
}

template <typename T>
T count_value(const nlohmann::json& value, const std::string& key) {
  if (!value.is_number_unsigned()) {
    throw std::invalid_argument("'" + key + "' must be a non-negative integer");
  }
  return value.get<T>();
}

}  // namespace

void ScenarioConfig::validate() const {
  metric_config.validate();
  if (attack_tick >= total_ticks && attacker_count > 0) {
    throw std::invalid_argument("attack_tick must be smaller than total_ticks");
  }
  if (worker_capacity < 1) {
    throw std::invalid_argument("worker_capacity must be at least 1");
  }
  if (!(isolation_threshold >= -1.0 && isolation_threshold <= 1.0)) {
    throw std::invalid_argument("isolation_threshold must lie in [-1, 1]");
  }
  check_band(adaptive_band, "adaptive");
  check_band(egoistic_band, "egoistic");
}

void to_json(nlohmann::json& j, const ScenarioConfig& cfg) {
  j = nlohmann::json{
      {"seed", cfg.seed},
      {"metric", metrics::to_string(cfg.metric)},
      {"metric_config", cfg.metric_config},
      {"initial_benevolent", cfg.initial_benevolent},
      {"initial_egoistic", cfg.initial_egoistic},
      {"attack_tick", cfg.attack_tick},
      {"attacker_count", cfg.attacker_count},
      {"total_ticks", cfg.total_ticks},
      {"tasks_per_tick", cfg.tasks_per_tick},
      {"worker_capacity", cfg.worker_capacity},
      {"isolation_threshold", cfg.isolation_threshold},
      {"rating_noise",
       {{"adaptive", {cfg.adaptive_band.lo, cfg.adaptive_band.hi}},
        {"egoistic", {cfg.egoistic_band.lo, cfg.egoistic_band.hi}}}},
  };
}

void from_json(const nlohmann::json& j, ScenarioConfig& cfg) {
  if (!j.is_object()) {
    throw std::invalid_argument("scenario config must be a JSON object");
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "seed") {
      cfg.seed = count_value<std::uint64_t>(value, key);
    } else if (key == "metric") {
      cfg.metric = metrics::parse_metric_kind(value.get<std::string>());
    } else if (key == "metric_config") {
      value.get_to(cfg.metric_config);
    } else if (key == "initial_benevolent") {
      cfg.initial_benevolent = count_value<std::size_t>(value, key);
    } else if (key == "initial_egoistic") {
      cfg.initial_egoistic = count_value<std::size_t>(value, key);
    } else if (key == "attack_tick") {
      cfg.attack_tick = count_value<std::uint64_t>(value, key);
    } else if (key == "attacker_count") {
      cfg.attacker_count = count_value<std::size_t>(value, key);
    } else if (key == "total_ticks") {
      cfg.total_ticks = count_value<std::uint64_t>(value, key);
    } else if (key == "tasks_per_tick") {
      cfg.tasks_per_tick = count_value<std::size_t>(value, key);
    } else if (key == "worker_capacity") {
      cfg.worker_capacity = count_value<std::size_t>(value, key);
    } else if (key == "isolation_threshold") {
      cfg.isolation_threshold = value.get<double>();
    } else if (key == "rating_noise") {
      for (const auto& [band, range] : value.items()) {
        if (band == "adaptive") {
          cfg.adaptive_band = band_from_json(range);
        } else if (band == "egoistic") {
          cfg.egoistic_band = band_from_json(range);
        } else {
          throw std::invalid_argument("unknown rating_noise key '" + band + "'");
        }
      }
    } else {
      throw std::invalid_argument("unknown scenario key '" + key + "'");
    }
  }
  cfg.validate();
}

}  // namespace sostrust::tdg
