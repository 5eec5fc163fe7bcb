#include "sostrust/simtrust/recommend.hpp"

#include <algorithm>

namespace sostrust::simtrust {

std::map<std::string, double> candidate_pool(const UserProfile& user,
                                             std::span<const UserProfile> profiles,
                                             const TrustFunction& trust, double theta) {
  std::map<std::string, double> scores;
  for (const auto& other : profiles) {
    if (other.id == user.id) continue;
    const double t = trust(user, other);
    if (t < theta || t <= 0.0) continue;
    for (const auto& item : other.items) {
      if (!user.items.contains(item)) {
        scores[item] += t;
      }
    }
  }
  return scores;
}

RecommendationResult recommend(const UserProfile& user, std::span<const UserProfile> profiles,
                               const TrustFunction& trust, double theta, std::size_t n) {
  const auto scores = candidate_pool(user, profiles, trust, theta);
  std::vector<std::pair<std::string, double>> ranked(scores.begin(), scores.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  RecommendationResult result{user.id, {}};
  for (std::size_t i = 0; i < ranked.size() && i < n; ++i) {
    result.items.push_back(ranked[i].first);
  }
  return result;
}

RecommendationResult recommend(const UserProfile& user, std::span<const UserProfile> profiles,
                               const SimTrustConfig& cfg, std::size_t n) {
  const KeywordVector mine = interest_vector(user);
  const TrustFunction trust = [&mine](const UserProfile&, const UserProfile& other) {
    return user_trust(mine, interest_vector(other));
  };
  return recommend(user, profiles, trust, cfg.theta_trust, n);
}

}  // namespace sostrust::simtrust
