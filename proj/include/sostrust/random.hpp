#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace sostrust {

/// Seeded pseudo-random source shared by every stochastic component.
///
/// The engine is MT19937-64 (std::mt19937_64), whose output sequence is fixed
/// by the C++ standard. The standard distributions are not portable, so the
/// conversions to doubles and bounded integers are done here:
///   - uniform01(): top 53 bits of one draw scaled by 2^-53, in [0, 1)
///   - below(n): rejection sampling on the 64-bit draw, unbiased in [0, n)
/// Any implementation reproducing these two rules reproduces every run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // (0, 1], used where a strictly positive value is required.
  double positive_unit() { return 1.0 - uniform01(); }

  std::uint64_t below(std::uint64_t n);

  bool bernoulli(double p) { return uniform01() < p; }

  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sostrust
