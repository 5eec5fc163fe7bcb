#include "sostrust/hybrid/audience.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sostrust/simtrust/trust.hpp"

namespace sostrust::hybrid {

metrics::Rating star_to_rating(int stars) {
  if (stars < 1 || stars > 5) {
    throw std::invalid_argument("stars must lie in 1..5, got " + std::to_string(stars));
  }
  return metrics::Rating((stars - 3) / 2.0);
}

TagResolver::TagResolver(simtrust::Corpus corpus) : corpus_(std::move(corpus)) {
  if (!corpus_.empty()) {
    index_ = simtrust::tf_idf(corpus_);
  }
}

simtrust::UserProfile TagResolver::resolve(simtrust::UserProfile profile) const {
  return simtrust::derive_tag_semantics(std::move(profile), corpus_, index_);
}

AudienceRating audience_rating(const std::string& item, std::span<const TaggedRating> ratings,
                               const simtrust::UserProfile& viewer,
                               const std::map<std::string, simtrust::UserProfile>& rater_profiles,
                               const TagResolver& resolver, const AudienceConfig& cfg) {
  cfg.metric.validate();
  const auto interest = simtrust::interest_vector(resolver.resolve(viewer));

  std::vector<const TaggedRating*> qualifying;
  for (const TaggedRating& r : ratings) {
    if (r.item != item) continue;
    simtrust::UserProfile rater;
    if (!r.tags.empty()) {
      rater.id = r.rater;
      rater.tag_labels = r.tags;
    } else if (const auto it = rater_profiles.find(r.rater); it != rater_profiles.end()) {
      rater = it->second;
    } else {
      continue;
    }
    const double trust =
        simtrust::user_trust(interest, simtrust::interest_vector(resolver.resolve(std::move(rater))));
    if (trust >= cfg.theta_trust) {
      qualifying.push_back(&r);
    }
  }
  std::stable_sort(qualifying.begin(), qualifying.end(),
                   [](const TaggedRating* a, const TaggedRating* b) { return a->seq < b->seq; });

  metrics::RatingState state;
  for (const TaggedRating* r : qualifying) {
    state = metrics::wses_update(state, r->rating, cfg.metric);
  }
  return {metrics::wses_trust(state, cfg.metric.initial_trust), qualifying.size()};
}

}  // namespace sostrust::hybrid
