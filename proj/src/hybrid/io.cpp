#include "sostrust/hybrid/io.hpp"

#include <stdexcept>

#include "sostrust/io.hpp"

namespace sostrust::hybrid {

TaggedRating tagged_rating_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "rater" && key != "item" && key != "stars" && key != "tags" && key != "seq") {
      throw std::invalid_argument("unexpected key '" + key + "'");
    }
  }
  return TaggedRating{j.at("rater").get<std::string>(), j.at("item").get<std::string>(),
                      star_to_rating(j.at("stars").get<int>()),
                      j.value("tags", std::vector<std::string>{}), j.at("seq").get<std::uint64_t>()};
}

std::vector<TaggedRating> read_ledger(const std::filesystem::path& path) {
  std::vector<TaggedRating> ledger;
  io::read_json_lines(path, [&](const nlohmann::json& j) { ledger.push_back(tagged_rating_from_json(j)); });
  return ledger;
}

void write_specialization_csv(std::ostream& out, const SpecializationResult& result) {
  out << "round,agent,skill,tau,delegated\n";
  for (const auto& row : result.rows) {
    out << row.round << ',' << row.agent << ',' << row.skill << ',' << io::format_double(row.tau)
        << ',' << row.delegated << '\n';
  }
}

}  // namespace sostrust::hybrid
