#include "sostrust/simtrust/corpus.hpp"

#include <stdexcept>

namespace sostrust::simtrust {

Corpus::Corpus(std::vector<Item> items) {
  items_.reserve(items.size());
  for (auto& item : items) {
    add(std::move(item));
  }
}

void Corpus::add(Item item) {
  if (index_.contains(item.id)) {
    throw std::invalid_argument("duplicate item id '" + item.id + "'");
  }
  index_.emplace(item.id, items_.size());
  items_.push_back(std::move(item));
}

std::optional<std::size_t> Corpus::index_of(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void UserProfile::validate() const {
  std::set<std::string> seen;
  for (const auto& label : tag_labels) {
    if (!seen.insert(label).second) {
      throw std::invalid_argument("user '" + id + "' repeats tag '" + label + "'");
    }
  }
}

}  // namespace sostrust::simtrust
