#include "sostrust/simtrust/tfidf.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "sostrust/simtrust/text.hpp"

namespace sostrust::simtrust {

TfIdfIndex tf_idf(const Corpus& corpus) {
  if (corpus.empty()) {
    throw std::invalid_argument("tf-idf needs a non-empty corpus");
  }
  const auto& items = corpus.items();
  TfIdfIndex index;
  index.vectors.resize(items.size());
  index.tokens.resize(items.size());
  index.tags.resize(items.size());

  std::vector<std::map<std::string, double>> counts(items.size());
  std::map<std::string, std::size_t> document_frequency;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (auto& token : tokenize(items[i].description)) {
      counts[i][token] += 1.0;
    }
    for (const auto& [term, _] : counts[i]) {
      ++document_frequency[term];
      index.tokens[i].insert(term);
    }
    for (const auto& tag : items[i].tags) {
      index.tags[i].insert(to_lower(tag));
    }
  }

  const double n = static_cast<double>(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (const auto& [term, tf] : counts[i]) {
      const double idf = std::log(n / static_cast<double>(document_frequency.at(term)));
      if (idf > 0.0) {
        index.vectors[i].emplace(term, tf * idf);
      }
    }
  }
  return index;
}

UserProfile derive_tag_semantics(UserProfile profile, const Corpus& corpus, const TfIdfIndex& index) {
  profile.validate();
  if (index.vectors.size() != corpus.size()) {
    throw std::invalid_argument("tf-idf index does not belong to this corpus");
  }
  profile.tags.clear();
  profile.tags.reserve(profile.tag_labels.size());
  for (const auto& label : profile.tag_labels) {
    const std::string key = to_lower(label);
    KeywordVector sum;
    std::size_t matched = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!index.tags[i].contains(key) && !index.tokens[i].contains(key)) continue;
      ++matched;
      for (const auto& [term, weight] : index.vectors[i]) {
        sum[term] += weight;
      }
    }
    TagSemantics semantics{label, {}};
    if (sum.empty()) {
      semantics.keywords.emplace(key, 1.0);
    } else {
      for (auto& [term, weight] : sum) {
        semantics.keywords.emplace(term, weight / static_cast<double>(matched));
      }
    }
    profile.tags.push_back(std::move(semantics));
  }
  return profile;
}

}  // namespace sostrust::simtrust
