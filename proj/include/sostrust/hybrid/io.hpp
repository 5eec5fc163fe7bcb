#pragma once

#include <filesystem>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "sostrust/hybrid/audience.hpp"
#include "sostrust/hybrid/specialization.hpp"

namespace sostrust::hybrid {

// {"rater": str, "item": str, "stars": int, "tags": [str], "seq": int}
TaggedRating tagged_rating_from_json(const nlohmann::json& j);
std::vector<TaggedRating> read_ledger(const std::filesystem::path& path);

/// CSV with header round,agent,skill,tau,delegated.
void write_specialization_csv(std::ostream& out, const SpecializationResult& result);

}  // namespace sostrust::hybrid
