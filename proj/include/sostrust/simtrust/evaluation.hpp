#pragma once

#include <set>
#include <string>
#include <vector>

#include "sostrust/simtrust/recommend.hpp"

namespace sostrust::simtrust {

struct EvaluationScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

/// Precision/recall of the recommended list against the ground truth, and
/// their harmonic mean. An empty recommendation scores all zeros.
/// Throws std::invalid_argument("undefined recall") on empty ground truth.
EvaluationScores evaluate(const RecommendationResult& recommendations,
                          const std::set<std::string>& ground_truth);


struct EvaluationConfig {
  SimTrustConfig simtrust;
  /// Jaccard neighbours at or above this count; the default admits any overlap.
  double cf_theta = 0.0;
  std::size_t top_n = 10;
};

struct EvaluationRow {
  std::string user_id;
  std::string algorithm;  // "simtrust" or "jaccard_cf"
  EvaluationScores scores;
};

/// Derives tag semantics for every profile, then scores SimTrust and the
/// Jaccard CF baseline for each user with a non-empty `preferred` set.
/// Rows come in profile order, simtrust before jaccard_cf.
std::vector<EvaluationRow> compare_recommenders(const Corpus& corpus,
                                                std::vector<UserProfile> profiles,
                                                const EvaluationConfig& cfg);

/// Mean F1 of one algorithm over the rows; 0 if it has no rows.
double mean_f1(const std::vector<EvaluationRow>& rows, const std::string& algorithm);

}  // namespace sostrust::simtrust
