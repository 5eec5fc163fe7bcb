// Independent reference computations used only by tests. Nothing here calls
// into the library; each function re-derives its result from first principles.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Row-by-row re-evaluation of the smoothing update, as one would fill a
// spreadsheet: compute both candidate rows, then pick by the sign of r.
struct Row {
  long double pos;
  long double neg;
};

inline Row wses_row(Row prev, long double r, long double alpha) {
  const Row positive_case{alpha * prev.pos + (1 - alpha) * r, alpha * prev.neg};
  const Row negative_case{alpha * prev.pos, alpha * prev.neg + (1 - alpha) * (-r)};
  if (r > 0) return positive_case;
  if (r < 0) return negative_case;
  return prev;
}

inline long double wses_tau(Row row, long double empty_value) {
  const long double total = row.pos + row.neg;
  return total == 0 ? empty_value : row.pos / total - row.neg / total;
}

// Jaccard by bitmask enumeration over a small universe.
inline double jaccard_bits(std::uint32_t a, std::uint32_t b) {
  const int inter = __builtin_popcount(a & b);
  const int uni = __builtin_popcount(a | b);
  return uni == 0 ? 0.0 : static_cast<double>(inter) / uni;
}

// Cosine similarity computed with dense vectors over a sorted key list.
inline double cosine_dense(const std::map<std::string, double>& a,
                           const std::map<std::string, double>& b) {
  std::set<std::string> keys;
  for (auto& [k, _] : a) keys.insert(k);
  for (auto& [k, _] : b) keys.insert(k);
  std::vector<double> x, y;
  for (auto& k : keys) {
    x.push_back(a.count(k) ? a.at(k) : 0.0);
    y.push_back(b.count(k) ? b.at(k) : 0.0);
  }
  double dot = 0, nx = 0, ny = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    dot += x[i] * y[i];
    nx += x[i] * x[i];
    ny += y[i] * y[i];
  }
  if (nx == 0 || ny == 0) return 0.0;
  return dot / std::sqrt(nx * ny);
}

}  // namespace oracle
