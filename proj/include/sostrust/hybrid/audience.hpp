#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sostrust/metrics/metrics.hpp"
#include "sostrust/simtrust/corpus.hpp"
#include "sostrust/simtrust/tfidf.hpp"

namespace sostrust::hybrid {

/// A rating enriched with the rater's tags at rating time.
struct TaggedRating {
  std::string rater;
  std::string item;
  metrics::Rating rating;
  std::vector<std::string> tags;
  std::uint64_t seq = 0;  // ledger order
};

/// Maps 1..5 stars linearly onto {-1, -0.5, 0, 0.5, 1}.
/// Throws std::invalid_argument outside 1..5.
metrics::Rating star_to_rating(int stars);

/// Derives tag semantics against a fixed corpus. Without a corpus every tag
/// resolves to its own label as a single keyword.
class TagResolver {
 public:
  TagResolver() = default;
  explicit TagResolver(simtrust::Corpus corpus);

  [[nodiscard]] simtrust::UserProfile resolve(simtrust::UserProfile profile) const;

 private:
  simtrust::Corpus corpus_;
  simtrust::TfIdfIndex index_;
};

struct AudienceConfig {
  metrics::MetricConfig metric;
  double theta_trust = 0.3;
};

struct AudienceRating {
  metrics::TrustValue trust;
  std::size_t qualifying = 0;  // ratings that passed the audience filter
};

/// Item trust as seen by `viewer`: the ratings of `item` whose rater is
/// similar to the viewer (user_trust >= theta_trust) are folded through WSES
/// in ledger order. A rating's own tags describe its rater; a rating without
/// tags falls back to the rater's entry in `rater_profiles`, and is skipped if
/// there is none. No qualifying rating yields initial_trust.
AudienceRating audience_rating(const std::string& item, std::span<const TaggedRating> ratings,
                               const simtrust::UserProfile& viewer,
                               const std::map<std::string, simtrust::UserProfile>& rater_profiles,
                               const TagResolver& resolver, const AudienceConfig& cfg);

}  // namespace sostrust::hybrid
