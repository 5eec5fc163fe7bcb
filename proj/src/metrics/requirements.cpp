#include "sostrust/metrics/requirements.hpp"

#include <stdexcept>
#include <utility>

#include "sostrust/random.hpp"

namespace sostrust::metrics {

namespace {

bool is_maximum(double tau, double slack) { return tau >= 1.0 - slack; }

struct Base {
  Metric metric;
  RatingHistory history;
};

Base random_base(MetricKind kind, const SuiteConfig& cfg, Rng& rng) {
  if (kind == MetricKind::wses) {
    RatingState s{rng.uniform01(), rng.uniform01()};
    // Boundary states: empty, all-positive, all-negative.
    switch (rng.below(10)) {
      case 0:
        s = {};
        break;
      case 1:
        s.p_neg = 0.0;
        break;
      case 2:
        s.p_pos = 0.0;
        break;
      default:
        break;
    }
    return {Metric::from_wses_state(cfg.metric, s), {}};
  }
  RatingHistory history;
  const std::size_t n = rng.below(cfg.max_history + 1);
  history.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    history.emplace_back(rng.uniform(-1.0, 1.0));
  }
  Metric m = Metric::from_history(kind, cfg.metric, history);
  return {std::move(m), std::move(history)};
}

}  // namespace

std::optional<Witness> check_r1(const Metric& base, Rating r1, Rating r2, double slack) {
  if (!(r2.value() > 0.0 && r1 > r2)) {
    throw std::invalid_argument("check_r1 requires r1 > r2 > 0");
  }
  const double high = base.updated(r1).trust().value();
  const double low = base.updated(r2).trust().value();
  if (is_maximum(low, slack) || low - high <= slack) {
    return std::nullopt;
  }
  Witness w{Requirement::r1, base.describe(), {}, r1.value(), r2.value(), high, low, base.at_capacity()};
  return w;
}

std::optional<Witness> check_r2(const Metric& base, Rating r, double slack) {
  if (!(r.value() > 0.0)) {
    throw std::invalid_argument("check_r2 requires r > 0");
  }
  const double before = base.trust().value();
  const double after = base.updated(r).trust().value();
  if (is_maximum(before, slack) || before - after <= slack) {
    return std::nullopt;
  }
  Witness w{Requirement::r2, base.describe(), {}, r.value(), 0.0, after, before, base.at_capacity()};
  return w;
}

RequirementReport run_requirement_suite(MetricKind kind, const SuiteConfig& cfg) {
  cfg.metric.validate();
  if (cfg.trials == 0) {
    throw std::invalid_argument("trials must be positive");
  }
  RequirementReport report;
  report.kind = kind;
  report.trials = cfg.trials;

  Rng rng(cfg.seed);
  auto record = [&](std::optional<Witness> w, const RatingHistory& history) {
    if (!w) return;
    (w->requirement == Requirement::r1 ? report.r1_witnesses : report.r2_witnesses)++;
    (w->at_capacity ? report.witnesses_at_cap : report.witnesses_below_cap)++;
    if (report.samples.size() < cfg.max_samples) {
      w->base_history = history;
      report.samples.push_back(std::move(*w));
    }
  };

  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Base base = random_base(kind, cfg, rng);
    if (base.metric.at_capacity()) {
      ++report.trials_at_cap;
    }

    double a = rng.positive_unit();
    double b = rng.positive_unit();
    while (a == b) {
      b = rng.positive_unit();
    }
    if (a < b) std::swap(a, b);
    record(check_r1(base.metric, Rating(a), Rating(b)), base.history);

    record(check_r2(base.metric, Rating(rng.positive_unit())), base.history);
  }
  return report;
}

}  // namespace sostrust::metrics
