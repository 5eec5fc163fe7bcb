#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace sostrust::simtrust {

/// Sparse keyword -> weight map. Ordered so iteration is deterministic.
using KeywordVector = std::map<std::string, double>;

struct Item {
  std::string id;
  std::string description;
  std::vector<std::string> tags;
};

/// Item collection with unique ids. Built once, then read-only.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(std::vector<Item> items);

  /// Throws std::invalid_argument on a duplicate id.
  void add(Item item);

  [[nodiscard]] const std::vector<Item>& items() const noexcept { return items_; }
  [[nodiscard]] std::size_t size() const noexcept { return items_.size(); }
  [[nodiscard]] bool empty() const noexcept { return items_.empty(); }
  [[nodiscard]] std::optional<std::size_t> index_of(const std::string& id) const;

 private:
  std::vector<Item> items_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// A tag together with the keywords that give it meaning.
struct TagSemantics {
  std::string tag;
  KeywordVector keywords;
};

/// A user's self-description and item relations.
///
/// `tag_labels` are the self-assigned tags; `tags` holds their derived
/// semantics once derive_tag_semantics has run. `items` are the items the
/// user holds or has rated; `preferred` is the held-out ground truth used
/// only for evaluation.
struct UserProfile {
  std::string id;
  std::vector<std::string> tag_labels;
  std::vector<TagSemantics> tags;
  std::set<std::string> items;
  std::set<std::string> preferred;

  /// Throws std::invalid_argument when a tag label repeats.
  void validate() const;
};

}  // namespace sostrust::simtrust
