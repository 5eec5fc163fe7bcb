#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sostrust/simtrust/corpus.hpp"
#include "sostrust/simtrust/trust.hpp"

namespace sostrust::simtrust {

struct RecommendationResult {
  std::string user_id;
  std::vector<std::string> items;  // ranked, best first
};

using TrustFunction = std::function<double(const UserProfile&, const UserProfile&)>;

/// Items held by neighbours whose trust reaches `theta`, minus the user's own
/// items, each scored by the summed trust of its holders.
std::map<std::string, double> candidate_pool(const UserProfile& user,
                                             std::span<const UserProfile> profiles,
                                             const TrustFunction& trust, double theta);

/// Top `n` of candidate_pool by score; ties go to the smaller item id.
RecommendationResult recommend(const UserProfile& user, std::span<const UserProfile> profiles,
                               const TrustFunction& trust, double theta, std::size_t n);

/// SimTrust recommendation: trust = user_trust on derived tag semantics.
RecommendationResult recommend(const UserProfile& user, std::span<const UserProfile> profiles,
                               const SimTrustConfig& cfg, std::size_t n);

}  // namespace sostrust::simtrust
