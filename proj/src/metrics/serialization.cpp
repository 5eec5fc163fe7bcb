#include "sostrust/metrics/serialization.hpp"

#include <stdexcept>

namespace sostrust::metrics {

void to_json(nlohmann::json& j, const RatingState& s) {
  j = nlohmann::json{{"p_pos", s.p_pos}, {"p_neg", s.p_neg}};
}

void from_json(const nlohmann::json& j, RatingState& s) {
  s.p_pos = j.at("p_pos").get<double>();
  s.p_neg = j.at("p_neg").get<double>();
  if (s.p_pos < 0.0 || s.p_neg < 0.0) {
    throw std::invalid_argument("rating state weights must be non-negative");
  }
}

void to_json(nlohmann::json& j, const MetricConfig& c) {
  j = nlohmann::json{
      {"alpha", c.alpha}, {"storage_cap", c.storage_cap}, {"initial_trust", c.initial_trust}};
}

void from_json(const nlohmann::json& j, MetricConfig& c) {
  for (const auto& [key, value] : j.items()) {
    if (key == "alpha") {
      c.alpha = value.get<double>();
    } else if (key == "storage_cap") {
      if (!value.is_number_unsigned()) {
        throw std::invalid_argument("metric_config.storage_cap must be a non-negative integer");
      }
      c.storage_cap = value.get<std::size_t>();
    } else if (key == "initial_trust") {
      c.initial_trust = value.get<double>();
    } else {
      throw std::invalid_argument("unknown metric_config key '" + key + "'");
    }
  }
  c.validate();
}

void to_json(nlohmann::json& j, const Witness& w) {
  j = nlohmann::json{{"requirement", w.requirement == Requirement::r1 ? "r1" : "r2"},
                     {"base", w.base},
                     {"at_capacity", w.at_capacity}};
  if (!w.base_history.empty()) {
    auto& h = j["base_history"] = nlohmann::json::array();
    for (const Rating& r : w.base_history) {
      h.push_back(r.value());
    }
  }
  if (w.requirement == Requirement::r1) {
    j["r1"] = w.rating_high;
    j["r2"] = w.rating_low;
    j["trust_r1"] = w.trust_high;
    j["trust_r2"] = w.trust_low;
  } else {
    j["r"] = w.rating_high;
    j["trust_before"] = w.trust_low;
    j["trust_after"] = w.trust_high;
  }
}

void to_json(nlohmann::json& j, const RequirementReport& r) {
  j = nlohmann::json{{"r1", r.r1_witnesses == 0 ? "pass" : "witness"},
                     {"r2", r.r2_witnesses == 0 ? "pass" : "witness"},
                     {"trials", r.trials},
                     {"r1_witnesses", r.r1_witnesses},
                     {"r2_witnesses", r.r2_witnesses},
                     {"witnesses", r.samples}};
  if (r.kind == MetricKind::weighted) {
    j["trials_at_cap"] = r.trials_at_cap;
    j["witnesses_at_cap"] = r.witnesses_at_cap;
    j["witnesses_below_cap"] = r.witnesses_below_cap;
  }
}

}  // namespace sostrust::metrics
