#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sostrust/simtrust/corpus.hpp"

namespace sostrust::simtrust {

/// Parameters of the synthetic interest-cluster corpus.
///
/// Each cluster owns a vocabulary and a pool of tags; each tag owns a slice
/// of the cluster vocabulary. Item descriptions draw mostly from their tags'
/// slices, the rest from the whole cluster vocabulary, and with probability
/// `mixing` per word from another cluster. Users pick tags from their
/// cluster's pool and prefer items, favouring items that share their tags.
/// Only `visible_per_user` of the preferred items are exposed as held items;
/// the rest become the evaluation ground truth.
struct SynthConfig {
  std::uint64_t seed = 1;
  std::size_t clusters = 4;
  std::size_t users_per_cluster = 10;
  std::size_t items_per_cluster = 30;
  std::size_t vocab_per_cluster = 48;
  std::size_t tags_per_cluster = 6;
  std::size_t tags_per_user = 3;
  std::size_t tags_per_item = 2;
  std::size_t description_words = 20;
  double tag_word_share = 0.7;
  double mixing = 0.0;
  std::size_t preferred_per_user = 12;
  std::size_t visible_per_user = 2;
  double tag_affinity = 3.0;  // preference weight of items sharing a user tag

  /// Throws std::invalid_argument on inconsistent counts.
  void validate() const;
};

struct SynthDataset {
  Corpus corpus;
  std::vector<UserProfile> profiles;  // tag labels only; semantics not derived
  std::vector<std::size_t> cluster_of_user;
};

SynthDataset synth_corpus(const SynthConfig& cfg);

}  // namespace sostrust::simtrust
