#pragma once

#include <ostream>

#include <json.hpp>

#include "sostrust/tdg/grid.hpp"

namespace sostrust::tdg {

/// CSV with header tick,agent_type,mean_reputation,population.
void write_series_csv(std::ostream& out, const std::vector<SeriesRow>& series);

/// [{"metric", "type", "mean_reputation_final", "mean_reputation_overall",
///   "crossed_below_half_at"}] with one entry per agent type.
nlohmann::json summary_json(const ScenarioResult& result);

}  // namespace sostrust::tdg
