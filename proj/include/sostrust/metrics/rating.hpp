#pragma once

#include <compare>
#include <cstddef>
#include <vector>

namespace sostrust::metrics {

/// A single explicit rating in [-1, 1]. 1 is the best outcome, -1 the worst.
class Rating {
 public:
  /// Throws std::invalid_argument for values outside [-1, 1] or NaN.
  explicit Rating(double value);

  [[nodiscard]] double value() const noexcept { return value_; }

  friend auto operator<=>(const Rating&, const Rating&) = default;

 private:
  double value_;
};

using RatingHistory = std::vector<Rating>;

/// Positive and negative rating mass. WSES keeps both in [0, 1]; the weighted
/// metric lets them grow up to its storage cap.
struct RatingState {
  double p_pos = 0.0;
  double p_neg = 0.0;

  friend bool operator==(const RatingState&, const RatingState&) = default;
};

struct MetricConfig {
  double alpha = 0.9;
  std::size_t storage_cap = 100;
  double initial_trust = 0.0;

  /// Throws std::invalid_argument unless 0 < alpha < 1, storage_cap >= 1 and
  /// initial_trust lies in [-1, 1].
  void validate() const;
};

/// Reputation in [-1, 1].
class TrustValue {
 public:
  explicit TrustValue(double tau);

  [[nodiscard]] double value() const noexcept { return tau_; }

  friend auto operator<=>(const TrustValue&, const TrustValue&) = default;

 private:
  double tau_;
};

}  // namespace sostrust::metrics
