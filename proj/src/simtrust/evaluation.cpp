#include "sostrust/simtrust/evaluation.hpp"

#include <stdexcept>

#include "sostrust/simtrust/tfidf.hpp"

namespace sostrust::simtrust {

EvaluationScores evaluate(const RecommendationResult& recommendations,
                          const std::set<std::string>& ground_truth) {
  if (ground_truth.empty()) {
    throw std::invalid_argument("undefined recall");
  }
  EvaluationScores s;
  if (recommendations.items.empty()) return s;
  std::size_t hits = 0;
  for (const auto& item : recommendations.items) {
    hits += ground_truth.contains(item) ? 1 : 0;
  }
  s.precision = static_cast<double>(hits) / static_cast<double>(recommendations.items.size());
  s.recall = static_cast<double>(hits) / static_cast<double>(ground_truth.size());
  if (hits > 0) {
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  }
  return s;
}


std::vector<EvaluationRow> compare_recommenders(const Corpus& corpus,
                                                std::vector<UserProfile> profiles,
                                                const EvaluationConfig& cfg) {
  const TfIdfIndex index = tf_idf(corpus);
  std::vector<KeywordVector> interests;
  interests.reserve(profiles.size());
  for (auto& p : profiles) {
    p = derive_tag_semantics(std::move(p), corpus, index);
    interests.push_back(interest_vector(p));
  }

  std::vector<EvaluationRow> rows;
  for (std::size_t u = 0; u < profiles.size(); ++u) {
    const UserProfile& user = profiles[u];
    if (user.preferred.empty()) continue;

    const TrustFunction simtrust = [&](const UserProfile&, const UserProfile& other) {
      // recommend() iterates `profiles`, so `other` points into it
      const auto offset = static_cast<std::size_t>(&other - profiles.data());
      return user_trust(interests[u], interests[offset]);
    };
    rows.push_back({user.id, "simtrust",
                    evaluate(recommend(user, profiles, simtrust, cfg.simtrust.theta_trust, cfg.top_n),
                             user.preferred)});
    rows.push_back({user.id, "jaccard_cf",
                    evaluate(recommend(user, profiles, jaccard_cf_trust, cfg.cf_theta, cfg.top_n),
                             user.preferred)});
  }
  return rows;
}

double mean_f1(const std::vector<EvaluationRow>& rows, const std::string& algorithm) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& row : rows) {
    if (row.algorithm != algorithm) continue;
    sum += row.scores.f1;
    ++n;
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

}  // namespace sostrust::simtrust
