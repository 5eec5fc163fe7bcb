#pragma once

#include "sostrust/simtrust/corpus.hpp"

namespace sostrust::simtrust {

struct SimTrustConfig {
  double theta_sim = 0.5;    // tags count as similar at or above this cosine
  double theta_trust = 0.3;  // users count as trusted at or above this
};

/// Cosine similarity over the union keyword space; 0 if either side has no weight.
double tag_similarity(const TagSemantics& a, const TagSemantics& b);

bool tags_similar(const TagSemantics& a, const TagSemantics& b, const SimTrustConfig& cfg = {});

/// Sum of a user's tag vectors.
KeywordVector interest_vector(const UserProfile& profile);

/// Mean over the keyword union of min(a_k, b_k) / max(a_k, b_k), on the two
/// users' interest vectors. Symmetric, in [0, 1], 0 when either is empty.
double user_trust(const UserProfile& a, const UserProfile& b);
double user_trust(const KeywordVector& a, const KeywordVector& b);

/// |items_a ∩ items_b| / |items_a ∪ items_b|, 0 when both are empty.
double jaccard_cf_trust(const UserProfile& a, const UserProfile& b);

}  // namespace sostrust::simtrust
