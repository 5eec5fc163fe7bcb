#include "sostrust/metrics/metrics.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sostrust::metrics {

namespace {

double signed_mass_trust(const RatingState& s, double initial_trust) {
  const double total = s.p_pos + s.p_neg;
  if (total <= 0.0) {
    return initial_trust;
  }
  return (s.p_pos - s.p_neg) / total;
}

}  // namespace

double normalized_average(std::span<const double> ratings) {
  if (ratings.empty()) {
    throw std::invalid_argument("no ratings");
  }
  return std::accumulate(ratings.begin(), ratings.end(), 0.0) /
         static_cast<double>(ratings.size());
}

RatingState wses_update(const RatingState& state, Rating r, const MetricConfig& cfg) {
  const double a = cfg.alpha;
  const double v = r.value();
  if (v > 0.0) {
    return {state.p_pos * a + (1.0 - a) * v, state.p_neg * a};
  }
  if (v < 0.0) {
    return {state.p_pos * a, state.p_neg * a - (1.0 - a) * v};
  }
  return state;
}

TrustValue wses_trust(const RatingState& state, double initial_trust) {
  return TrustValue(signed_mass_trust(state, initial_trust));
}

RatingHistory continuous_update(RatingHistory history, Rating r) {
  history.push_back(r);
  return history;
}

TrustValue continuous_trust(const RatingHistory& history, double initial_trust) {
  if (history.empty()) {
    return TrustValue(initial_trust);
  }
  double sum = 0.0;
  for (const Rating& r : history) {
    sum += r.value();
  }
  return TrustValue(sum / static_cast<double>(history.size()));
}

ContinuousState continuous_update(ContinuousState state, Rating r) {
  state.sum += r.value();
  ++state.count;
  return state;
}

TrustValue continuous_trust(const ContinuousState& state, double initial_trust) {
  if (state.count == 0) {
    return TrustValue(initial_trust);
  }
  return TrustValue(state.sum / static_cast<double>(state.count));
}

WeightedState weighted_update(WeightedState state, Rating r, const MetricConfig& cfg) {
  const double v = r.value();
  if (state.stored.size() >= cfg.storage_cap) {
    while (state.stored.size() >= cfg.storage_cap) {
      state.stored.pop_front();
    }
    state.stored.push_back(v);
    // Rebuild from the window rather than subtracting the evicted rating.
    state.mass = {};
    for (double x : state.stored) {
      if (x > 0.0) {
        state.mass.p_pos += x;
      } else {
        state.mass.p_neg -= x;
      }
    }
    return state;
  }
  state.stored.push_back(v);
  if (v > 0.0) {
    state.mass.p_pos += v;
  } else {
    state.mass.p_neg -= v;
  }
  return state;
}

TrustValue weighted_trust(const WeightedState& state, double initial_trust) {
  return TrustValue(signed_mass_trust(state.mass, initial_trust));
}

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::continuous:
      return "continuous";
    case MetricKind::weighted:
      return "weighted";
    case MetricKind::wses:
      return "wses";
  }
  return "unknown";
}

MetricKind parse_metric_kind(std::string_view name) {
  if (name == "continuous") return MetricKind::continuous;
  if (name == "weighted") return MetricKind::weighted;
  if (name == "wses") return MetricKind::wses;
  throw std::invalid_argument("unknown metric '" + std::string(name) +
                              "' (expected continuous, weighted or wses)");
}

Metric::Metric(MetricKind kind, MetricConfig cfg) : kind_(kind), cfg_(cfg) {
  cfg_.validate();
  switch (kind_) {
    case MetricKind::continuous:
      state_ = ContinuousState{};
      break;
    case MetricKind::weighted:
      state_ = WeightedState{};
      break;
    case MetricKind::wses:
      state_ = RatingState{};
      break;
  }
}

Metric Metric::from_history(MetricKind kind, MetricConfig cfg, std::span<const Rating> history) {
  Metric m(kind, cfg);
  for (const Rating& r : history) {
    m.update(r);
  }
  return m;
}

Metric Metric::from_wses_state(MetricConfig cfg, RatingState state) {
  if (!(state.p_pos >= 0.0 && state.p_pos <= 1.0 && state.p_neg >= 0.0 && state.p_neg <= 1.0)) {
    throw std::invalid_argument("WSES state must lie in [0,1]^2");
  }
  Metric m(MetricKind::wses, cfg);
  m.state_ = state;
  return m;
}

void Metric::update(Rating r) {
  std::visit(
      [&](auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ContinuousState>) {
          s = continuous_update(s, r);
        } else if constexpr (std::is_same_v<S, WeightedState>) {
          s = weighted_update(std::move(s), r, cfg_);
        } else {
          s = wses_update(s, r, cfg_);
        }
      },
      state_);
}

Metric Metric::updated(Rating r) const {
  Metric copy = *this;
  copy.update(r);
  return copy;
}

TrustValue Metric::trust() const {
  return std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ContinuousState>) {
          return continuous_trust(s, cfg_.initial_trust);
        } else if constexpr (std::is_same_v<S, WeightedState>) {
          return weighted_trust(s, cfg_.initial_trust);
        } else {
          return wses_trust(s, cfg_.initial_trust);
        }
      },
      state_);
}

std::size_t Metric::stored_count() const noexcept {
  if (const auto* c = std::get_if<ContinuousState>(&state_)) return c->count;
  if (const auto* w = std::get_if<WeightedState>(&state_)) return w->stored.size();
  return 0;
}

bool Metric::at_capacity() const noexcept {
  const auto* w = std::get_if<WeightedState>(&state_);
  return w != nullptr && w->stored.size() >= cfg_.storage_cap;
}

std::string Metric::describe() const {
  std::ostringstream out;
  out.precision(17);
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, ContinuousState>) {
          out << "continuous{sum=" << s.sum << ", count=" << s.count << "}";
        } else if constexpr (std::is_same_v<S, WeightedState>) {
          out << "weighted{cap=" << cfg_.storage_cap << ", stored=[";
          for (std::size_t i = 0; i < s.stored.size(); ++i) {
            out << (i ? "," : "") << s.stored[i];
          }
          out << "]}";
        } else {
          out << "wses{p_pos=" << s.p_pos << ", p_neg=" << s.p_neg << "}";
        }
      },
      state_);
  return out.str();
}

}  // namespace sostrust::metrics
