#include "sostrust/metrics/rating.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sostrust::metrics {

Rating::Rating(double value) : value_(value) {
  if (!(value >= -1.0 && value <= 1.0)) {
    throw std::invalid_argument("rating out of range [-1, 1]: " + std::to_string(value));
  }
}

void MetricConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
  if (storage_cap < 1) {
    throw std::invalid_argument("storage_cap must be at least 1");
  }
  if (!(initial_trust >= -1.0 && initial_trust <= 1.0)) {
    throw std::invalid_argument("initial_trust must lie in [-1, 1]");
  }
}

TrustValue::TrustValue(double tau) : tau_(tau) {
  if (!(tau >= -1.0 && tau <= 1.0)) {
    throw std::invalid_argument("trust value out of range [-1, 1]: " + std::to_string(tau));
  }
}

}  // namespace sostrust::metrics
