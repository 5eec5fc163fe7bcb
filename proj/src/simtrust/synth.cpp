#include "sostrust/simtrust/synth.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sostrust/random.hpp"

namespace sostrust::simtrust {

namespace {

std::string pad(std::size_t value, int width) {
  std::string s = std::to_string(value);
  if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
  return s;
}

std::string word(std::size_t cluster, std::size_t k) { return "c" + std::to_string(cluster) + "w" + pad(k, 3); }
std::string tag_label(std::size_t cluster, std::size_t k) { return "c" + std::to_string(cluster) + "tag" + std::to_string(k); }
std::string item_id(std::size_t cluster, std::size_t k) { return "c" + std::to_string(cluster) + "-item" + pad(k, 3); }
std::string user_id(std::size_t cluster, std::size_t k) { return "c" + std::to_string(cluster) + "-user" + pad(k, 3); }

// k distinct indices from [0, n), in draw order.
std::vector<std::size_t> sample(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  rng.shuffle(all);
  all.resize(k);
  return all;
}

// k distinct indices drawn without replacement proportionally to weights.
std::vector<std::size_t> weighted_sample(Rng& rng, std::vector<double> weights, std::size_t k) {
  std::vector<std::size_t> picked;
  for (std::size_t draw = 0; draw < k; ++draw) {
    const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
    double target = rng.uniform01() * total;
    std::size_t chosen = weights.size();
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] <= 0.0) continue;
      chosen = i;
      if (target < weights[i]) break;
      target -= weights[i];
    }
    picked.push_back(chosen);
    weights[chosen] = 0.0;
  }
  return picked;
}

}  // namespace

void SynthConfig::validate() const {
  if (clusters < 1 || users_per_cluster < 1 || items_per_cluster < 1 || vocab_per_cluster < 1 ||
      tags_per_cluster < 1 || description_words < 1) {
    throw std::invalid_argument("synthetic corpus counts must be at least 1");
  }
  if (tags_per_user < 1 || tags_per_user > tags_per_cluster) {
    throw std::invalid_argument("tags_per_user must lie in [1, tags_per_cluster]");
  }
  if (tags_per_item < 1 || tags_per_item > tags_per_cluster) {
    throw std::invalid_argument("tags_per_item must lie in [1, tags_per_cluster]");
  }
  if (vocab_per_cluster < tags_per_cluster) {
    throw std::invalid_argument("vocab_per_cluster must be at least tags_per_cluster");
  }
  if (preferred_per_user > items_per_cluster || visible_per_user >= preferred_per_user) {
    throw std::invalid_argument(
        "need visible_per_user < preferred_per_user <= items_per_cluster");
  }
  if (!(mixing >= 0.0 && mixing <= 1.0) || !(tag_word_share >= 0.0 && tag_word_share <= 1.0)) {
    throw std::invalid_argument("mixing and tag_word_share must lie in [0, 1]");
  }
  if (!(tag_affinity > 0.0)) {
    throw std::invalid_argument("tag_affinity must be positive");
  }
}

SynthDataset synth_corpus(const SynthConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  SynthDataset data;
  const std::size_t slice = cfg.vocab_per_cluster / cfg.tags_per_cluster;

  // item tags per cluster, kept for preference weighting
  std::vector<std::vector<std::vector<std::size_t>>> item_tags(cfg.clusters);

  for (std::size_t c = 0; c < cfg.clusters; ++c) {
    for (std::size_t i = 0; i < cfg.items_per_cluster; ++i) {
      auto tags = sample(rng, cfg.tags_per_cluster, cfg.tags_per_item);
      std::string description;
      for (std::size_t w = 0; w < cfg.description_words; ++w) {
        std::size_t cluster = c;
        if (cfg.clusters > 1 && rng.bernoulli(cfg.mixing)) {
          cluster = (c + 1 + rng.below(cfg.clusters - 1)) % cfg.clusters;
        }
        std::size_t k;
        if (rng.bernoulli(cfg.tag_word_share)) {
          const std::size_t tag = tags[rng.below(tags.size())];
          k = tag * slice + rng.below(slice);
        } else {
          k = rng.below(cfg.vocab_per_cluster);
        }
        if (!description.empty()) description += ' ';
        description += word(cluster, k);
      }
      Item item{item_id(c, i), std::move(description), {}};
      for (std::size_t t : tags) item.tags.push_back(tag_label(c, t));
      data.corpus.add(std::move(item));
      item_tags[c].push_back(std::move(tags));
    }
  }

  for (std::size_t c = 0; c < cfg.clusters; ++c) {
    for (std::size_t u = 0; u < cfg.users_per_cluster; ++u) {
      UserProfile profile;
      profile.id = user_id(c, u);
      const auto tags = sample(rng, cfg.tags_per_cluster, cfg.tags_per_user);
      for (std::size_t t : tags) profile.tag_labels.push_back(tag_label(c, t));

      std::vector<double> weights(cfg.items_per_cluster, 1.0);
      for (std::size_t i = 0; i < cfg.items_per_cluster; ++i) {
        for (std::size_t t : item_tags[c][i]) {
          if (std::find(tags.begin(), tags.end(), t) != tags.end()) {
            weights[i] = cfg.tag_affinity;
            break;
          }
        }
      }
      const auto preferred = weighted_sample(rng, std::move(weights), cfg.preferred_per_user);
      for (std::size_t k = 0; k < preferred.size(); ++k) {
        auto& target = k < cfg.visible_per_user ? profile.items : profile.preferred;
        target.insert(item_id(c, preferred[k]));
      }
      data.profiles.push_back(std::move(profile));
      data.cluster_of_user.push_back(c);
    }
  }
  return data;
}

}  // namespace sostrust::simtrust
