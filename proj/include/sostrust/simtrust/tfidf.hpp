#pragma once

#include <set>
#include <string>
#include <vector>

#include "sostrust/simtrust/corpus.hpp"

namespace sostrust::simtrust {

/// Per-item tf-idf vectors plus the lowercased description tokens and tags
/// used to associate items with tag labels. Indexed like Corpus::items().
struct TfIdfIndex {
  std::vector<KeywordVector> vectors;
  std::vector<std::set<std::string>> tokens;
  std::vector<std::set<std::string>> tags;
};

/// weight(term, item) = count(term, item) * ln(N / df(term)).
/// Zero weights (terms present in every item) are not stored. An item with an
/// empty description gets an empty vector. Throws on an empty corpus.
TfIdfIndex tf_idf(const Corpus& corpus);

/// Fills profile.tags from profile.tag_labels. A tag's keyword vector is the
/// mean of the tf-idf vectors of every corpus item carrying the label, either
/// among its tags or its description tokens (case-insensitive). A tag with no
/// such item, or whose items carry no weight, becomes {label: 1}.
UserProfile derive_tag_semantics(UserProfile profile, const Corpus& corpus, const TfIdfIndex& index);

}  // namespace sostrust::simtrust
