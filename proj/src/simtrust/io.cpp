#include "sostrust/simtrust/io.hpp"

#include <stdexcept>

#include "sostrust/io.hpp"

namespace sostrust::simtrust {

namespace {

void require_keys(const nlohmann::json& j, std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) {
    throw std::invalid_argument("expected a JSON object");
  }
  for (const auto& [key, _] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw std::invalid_argument("unexpected key '" + key + "'");
    }
  }
}

}  // namespace

Item item_from_json(const nlohmann::json& j) {
  require_keys(j, {"id", "description", "tags"});
  Item item;
  item.id = j.at("id").get<std::string>();
  item.description = j.at("description").get<std::string>();
  if (j.contains("tags")) item.tags = j.at("tags").get<std::vector<std::string>>();
  return item;
}

UserProfile profile_from_json(const nlohmann::json& j) {
  require_keys(j, {"user", "tags", "items", "preferred"});
  UserProfile p;
  p.id = j.at("user").get<std::string>();
  p.tag_labels = j.at("tags").get<std::vector<std::string>>();
  if (j.contains("items")) p.items = j.at("items").get<std::set<std::string>>();
  if (j.contains("preferred")) p.preferred = j.at("preferred").get<std::set<std::string>>();
  p.validate();
  return p;
}

nlohmann::json to_json(const Item& item) {
  return {{"id", item.id}, {"description", item.description}, {"tags", item.tags}};
}

nlohmann::json to_json(const UserProfile& profile) {
  nlohmann::json j{{"user", profile.id}, {"tags", profile.tag_labels}, {"items", profile.items}};
  if (!profile.preferred.empty()) j["preferred"] = profile.preferred;
  return j;
}

Corpus read_corpus(const std::filesystem::path& path) {
  Corpus corpus;
  io::read_json_lines(path, [&](const nlohmann::json& j) { corpus.add(item_from_json(j)); });
  return corpus;
}

std::vector<UserProfile> read_profiles(const std::filesystem::path& path) {
  std::vector<UserProfile> profiles;
  io::read_json_lines(path, [&](const nlohmann::json& j) { profiles.push_back(profile_from_json(j)); });
  return profiles;
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& item : corpus.items()) out << to_json(item).dump() << '\n';
}

void write_profiles(std::ostream& out, const std::vector<UserProfile>& profiles) {
  for (const auto& p : profiles) out << to_json(p).dump() << '\n';
}

void write_evaluation_csv(std::ostream& out, const std::vector<EvaluationRow>& rows) {
  out << "user_id,algorithm,precision,recall,f1\n";
  for (const auto& row : rows) {
    out << row.user_id << ',' << row.algorithm << ',' << io::format_double(row.scores.precision)
        << ',' << io::format_double(row.scores.recall) << ',' << io::format_double(row.scores.f1)
        << '\n';
  }
}


void from_json(const nlohmann::json& j, SynthConfig& cfg) {
  if (!j.is_object()) throw std::invalid_argument("synthetic config must be an object");
  for (const auto& [key, value] : j.items()) {
    const auto count = [&] {
      if (!value.is_number_unsigned()) {
        throw std::invalid_argument("'" + key + "' must be a non-negative integer");
      }
      return value.get<std::size_t>();
    };
    if (key == "seed") cfg.seed = count();
    else if (key == "clusters") cfg.clusters = count();
    else if (key == "users_per_cluster") cfg.users_per_cluster = count();
    else if (key == "items_per_cluster") cfg.items_per_cluster = count();
    else if (key == "vocab_per_cluster") cfg.vocab_per_cluster = count();
    else if (key == "tags_per_cluster") cfg.tags_per_cluster = count();
    else if (key == "tags_per_user") cfg.tags_per_user = count();
    else if (key == "tags_per_item") cfg.tags_per_item = count();
    else if (key == "description_words") cfg.description_words = count();
    else if (key == "preferred_per_user") cfg.preferred_per_user = count();
    else if (key == "visible_per_user") cfg.visible_per_user = count();
    else if (key == "tag_word_share") cfg.tag_word_share = value.get<double>();
    else if (key == "mixing") cfg.mixing = value.get<double>();
    else if (key == "tag_affinity") cfg.tag_affinity = value.get<double>();
    else throw std::invalid_argument("unknown synthetic key '" + key + "'");
  }
  cfg.validate();
}

void to_json(nlohmann::json& j, const SynthConfig& cfg) {
  j = nlohmann::json{{"seed", cfg.seed},
                     {"clusters", cfg.clusters},
                     {"users_per_cluster", cfg.users_per_cluster},
                     {"items_per_cluster", cfg.items_per_cluster},
                     {"vocab_per_cluster", cfg.vocab_per_cluster},
                     {"tags_per_cluster", cfg.tags_per_cluster},
                     {"tags_per_user", cfg.tags_per_user},
                     {"tags_per_item", cfg.tags_per_item},
                     {"description_words", cfg.description_words},
                     {"tag_word_share", cfg.tag_word_share},
                     {"mixing", cfg.mixing},
                     {"preferred_per_user", cfg.preferred_per_user},
                     {"visible_per_user", cfg.visible_per_user},
                     {"tag_affinity", cfg.tag_affinity}};
}

}  // namespace sostrust::simtrust
