#include "sostrust/simtrust/trust.hpp"

#include <algorithm>
#include <cmath>

namespace sostrust::simtrust {

double tag_similarity(const TagSemantics& a, const TagSemantics& b) {
  double dot = 0.0;
  double na = 0.0;
  double nb = 0.0;
  for (const auto& [k, w] : a.keywords) {
    na += w * w;
    if (const auto it = b.keywords.find(k); it != b.keywords.end()) {
      dot += w * it->second;
    }
  }
  for (const auto& [k, w] : b.keywords) {
    nb += w * w;
  }
  if (na <= 0.0 || nb <= 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), 0.0, 1.0);
}

bool tags_similar(const TagSemantics& a, const TagSemantics& b, const SimTrustConfig& cfg) {
  return tag_similarity(a, b) >= cfg.theta_sim;
}

KeywordVector interest_vector(const UserProfile& profile) {
  KeywordVector sum;
  for (const auto& tag : profile.tags) {
    for (const auto& [k, w] : tag.keywords) {
      sum[k] += w;
    }
  }
  return sum;
}

double user_trust(const KeywordVector& a, const KeywordVector& b) {
  if (a.empty() || b.empty()) return 0.0;
  // Merge walk over the two ordered maps.
  double total = 0.0;
  std::size_t keywords = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    ++keywords;
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      ++ib;
    } else {
      const double lo = std::min(ia->second, ib->second);
      const double hi = std::max(ia->second, ib->second);
      if (lo > 0.0) total += lo / hi;
      ++ia;
      ++ib;
    }
  }
  return total / static_cast<double>(keywords);
}

double user_trust(const UserProfile& a, const UserProfile& b) {
  return user_trust(interest_vector(a), interest_vector(b));
}

double jaccard_cf_trust(const UserProfile& a, const UserProfile& b) {
  std::size_t shared = 0;
  for (const auto& item : a.items) {
    shared += b.items.contains(item) ? 1 : 0;
  }
  const std::size_t total = a.items.size() + b.items.size() - shared;
  return total == 0 ? 0.0 : static_cast<double>(shared) / static_cast<double>(total);
}

}  // namespace sostrust::simtrust
