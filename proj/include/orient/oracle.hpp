#pragma once

#include <cstdint>

#include "orient/graph.hpp"

namespace orient {

inline constexpr int kBruteForceEdgeLimit = 24;

/// Extremes of R over all 2^|E| orientations of a graph.
struct OrientationRange {
  std::uint64_t max_r = 0;
  std::uint64_t min_r = 0;
  Orientation argmax;
  Orientation argmin;
};

/// Exhaustive enumeration. Throws SizeLimitError when |E| > 24.
OrientationRange brute_force_orientations(const Graph& g);

}  // namespace orient
