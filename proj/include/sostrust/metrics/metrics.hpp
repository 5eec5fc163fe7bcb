#pragma once

#include <cstddef>
#include <deque>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "sostrust/metrics/rating.hpp"

namespace sostrust::metrics {

/// Plain mean of a raw rating sequence. Kept separate from the [-1, 1] domain
/// so the classic [0, 1] counterexample, where (1,1,1) scores 1 and
/// (1,1,1,0.5,0.5,0.5) scores only 0.75, can be evaluated verbatim.
/// Throws std::invalid_argument("no ratings") on an empty sequence.
double normalized_average(std::span<const double> ratings);

// -- Weighted simple exponential smoothing (WSES) ----------------------------
//
// State is the pair (p_pos, p_neg) in [0,1]^2. A positive rating r moves
// p_pos towards r and decays p_neg; a negative rating does the mirror image;
// r == 0 leaves the state untouched (no decay either). Trust is
// (p_pos - p_neg) / (p_pos + p_neg), and the empty state reports
// cfg.initial_trust.

RatingState wses_update(const RatingState& state, Rating r, const MetricConfig& cfg);
TrustValue wses_trust(const RatingState& state, double initial_trust = 0.0);

// -- Continuous metric: arithmetic mean over every rating received ----------

RatingHistory continuous_update(RatingHistory history, Rating r);
TrustValue continuous_trust(const RatingHistory& history, double initial_trust = 0.0);

/// Running form of the continuous metric; equivalent to the history form
/// without keeping the ratings.
struct ContinuousState {
  double sum = 0.0;
  std::size_t count = 0;
};

ContinuousState continuous_update(ContinuousState state, Rating r);
TrustValue continuous_trust(const ContinuousState& state, double initial_trust = 0.0);

// -- Weighted metric: signed mass over a FIFO window of storage_cap ratings --

struct WeightedState {
  RatingState mass;
  std::deque<double> stored;
};

WeightedState weighted_update(WeightedState state, Rating r, const MetricConfig& cfg);
TrustValue weighted_trust(const WeightedState& state, double initial_trust = 0.0);

enum class MetricKind { continuous, weighted, wses };

std::string_view to_string(MetricKind kind);
/// Accepts "continuous", "weighted", "wses"; throws std::invalid_argument.
MetricKind parse_metric_kind(std::string_view name);

/// Value-semantic trust metric: one update function paired with one trust
/// function, selected at construction.
class Metric {
 public:
  Metric(MetricKind kind, MetricConfig cfg);

  static Metric from_history(MetricKind kind, MetricConfig cfg, std::span<const Rating> history);
  static Metric from_wses_state(MetricConfig cfg, RatingState state);

  void update(Rating r);
  [[nodiscard]] Metric updated(Rating r) const;
  [[nodiscard]] TrustValue trust() const;

  [[nodiscard]] MetricKind kind() const noexcept { return kind_; }
  [[nodiscard]] const MetricConfig& config() const noexcept { return cfg_; }

  /// Ratings currently held by the metric (0 for WSES, which stores none).
  [[nodiscard]] std::size_t stored_count() const noexcept;
  /// True when the next update of a weighted metric evicts a stored rating.
  [[nodiscard]] bool at_capacity() const noexcept;

  [[nodiscard]] std::string describe() const;

 private:
  MetricKind kind_;
  MetricConfig cfg_;
  std::variant<ContinuousState, WeightedState, RatingState> state_;
};

}  // namespace sostrust::metrics
