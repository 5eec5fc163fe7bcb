#include "sostrust/tdg/io.hpp"

#include "sostrust/io.hpp"

namespace sostrust::tdg {

void write_series_csv(std::ostream& out, const std::vector<SeriesRow>& series) {
  out << "tick,agent_type,mean_reputation,population\n";
  for (const SeriesRow& row : series) {
    out << row.tick << ',' << to_string(row.type) << ',' << io::format_double(row.mean_reputation)
        << ',' << row.population << '\n';
  }
}

nlohmann::json summary_json(const ScenarioResult& result) {
  auto out = nlohmann::json::array();
  for (const TypeSummary& s : result.summary) {
    nlohmann::json entry{{"metric", metrics::to_string(result.metric)},
                         {"type", to_string(s.type)},
                         {"mean_reputation_final", s.mean_reputation_final},
                         {"mean_reputation_overall", s.mean_reputation_overall},
                         {"crossed_below_half_at", nullptr}};
    if (s.crossed_below_half_at) entry["crossed_below_half_at"] = *s.crossed_below_half_at;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace sostrust::tdg
