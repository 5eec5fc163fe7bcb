#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sostrust/metrics/metrics.hpp"

namespace sostrust::metrics {

/// Absolute slack absorbed before a failed strict inequality counts.
inline constexpr double kRequirementSlack = 1e-12;

enum class Requirement { r1, r2 };

/// Counterexample to R1 or R2.
///
/// For R1, `trust_high` is the trust after folding the larger rating and
/// `trust_low` after the smaller one. For R2, `trust_high` is the trust after
/// the positive rating and `trust_low` the trust before it.
struct Witness {
  Requirement requirement;
  std::string base;           // Metric::describe() of the base state
  RatingHistory base_history; // empty when the base was a raw WSES state
  double rating_high = 0.0;   // r1 (R1) or r (R2)
  double rating_low = 0.0;    // r2 (R1), unused for R2
  double trust_high = 0.0;
  double trust_low = 0.0;
  bool at_capacity = false;   // weighted metric window was full
};

/// R1: for positive r1 > r2, T(U(R, r1)) > T(U(R, r2)) unless T(U(R, r2)) = 1.
/// Throws std::invalid_argument unless r1 > r2 > 0.
std::optional<Witness> check_r1(const Metric& base, Rating r1, Rating r2,
                                double slack = kRequirementSlack);

/// R2: for positive r, T(U(R, r)) > T(R) unless T(R) = 1.
/// Throws std::invalid_argument unless r > 0.
std::optional<Witness> check_r2(const Metric& base, Rating r, double slack = kRequirementSlack);

struct SuiteConfig {
  std::size_t trials = 100000;
  std::uint64_t seed = 1;
  MetricConfig metric;
  /// Histories for the continuous/weighted metrics have 0..max_history ratings.
  std::size_t max_history = 12;
  /// Witnesses kept verbatim in the report.
  std::size_t max_samples = 5;
};

struct RequirementReport {
  MetricKind kind = MetricKind::wses;
  std::size_t trials = 0;
  std::size_t r1_witnesses = 0;
  std::size_t r2_witnesses = 0;
  // Split by whether the weighted window was full before the checked update.
  std::size_t witnesses_below_cap = 0;
  std::size_t witnesses_at_cap = 0;
  std::size_t trials_at_cap = 0;
  std::vector<Witness> samples;
};

/// Randomized R1 and R2 checks, `trials` of each. WSES bases are random states
/// in [0,1]^2 (with a share of boundary states); the other metrics are built
/// from random histories in [-1,1]. Deterministic in cfg.seed.
RequirementReport run_requirement_suite(MetricKind kind, const SuiteConfig& cfg);

}  // namespace sostrust::metrics
