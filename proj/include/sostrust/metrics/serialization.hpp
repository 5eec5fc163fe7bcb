#pragma once

#include <json.hpp>

#include "sostrust/metrics/rating.hpp"
#include "sostrust/metrics/requirements.hpp"

namespace sostrust::metrics {

// {"p_pos": float, "p_neg": float}
void to_json(nlohmann::json& j, const RatingState& s);
void from_json(const nlohmann::json& j, RatingState& s);

// {"alpha": float, "storage_cap": int, "initial_trust": float}; missing keys keep defaults.
void to_json(nlohmann::json& j, const MetricConfig& c);
void from_json(const nlohmann::json& j, MetricConfig& c);

void to_json(nlohmann::json& j, const Witness& w);
void to_json(nlohmann::json& j, const RequirementReport& r);

}  // namespace sostrust::metrics
