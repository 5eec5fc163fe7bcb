#pragma once

#include <filesystem>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "sostrust/simtrust/corpus.hpp"
#include "sostrust/simtrust/evaluation.hpp"
#include "sostrust/simtrust/synth.hpp"

namespace sostrust::simtrust {

// Corpus line:  {"id": str, "description": str, "tags": [str]}
// Profile line: {"user": str, "tags": [str], "items": [str], "preferred": [str]}
// "preferred" is optional; users without it only act as neighbours.
Item item_from_json(const nlohmann::json& j);
UserProfile profile_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Item& item);
nlohmann::json to_json(const UserProfile& profile);

Corpus read_corpus(const std::filesystem::path& path);
std::vector<UserProfile> read_profiles(const std::filesystem::path& path);

void write_corpus(std::ostream& out, const Corpus& corpus);
void write_profiles(std::ostream& out, const std::vector<UserProfile>& profiles);

/// CSV with header user_id,algorithm,precision,recall,f1.
void write_evaluation_csv(std::ostream& out, const std::vector<EvaluationRow>& rows);

/// Field-for-field mirror of SynthConfig; missing keys keep defaults.
void from_json(const nlohmann::json& j, SynthConfig& cfg);
void to_json(nlohmann::json& j, const SynthConfig& cfg);

}  // namespace sostrust::simtrust
