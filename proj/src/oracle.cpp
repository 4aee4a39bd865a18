#include "orient/oracle.hpp"

#include <bit>
#include <string>
#include <vector>

namespace orient {

OrientationRange brute_force_orientations(const Graph& g) {
  const int n = g.num_vertices(), m = g.num_edges();
  if (m > kBruteForceEdgeLimit)
    throw SizeLimitError("orientation enumeration limited to " + std::to_string(kBruteForceEdgeLimit) +
                         " edges, got " + std::to_string(m));
  if (n > 64) throw SizeLimitError("orientation enumeration needs n <= 64");

  // Reachability by fixpoint iteration over bitmask rows.
  std::vector<std::uint64_t> reach(n);
  auto evaluate = [&](std::uint32_t mask) {
    for (auto& row : reach) row = 0;
    for (int e = 0; e < m; ++e) {
      const auto [u, v] = g.edge(e);
      if ((mask >> e) & 1U) reach[v] |= std::uint64_t{1} << u;
      else reach[u] |= std::uint64_t{1} << v;
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (int x = 0; x < n; ++x) {
        std::uint64_t row = reach[x];
        for (std::uint64_t bits = reach[x]; bits != 0; bits &= bits - 1) row |= reach[std::countr_zero(bits)];
        row &= ~(std::uint64_t{1} << x);
        if (row != reach[x]) {
          reach[x] = row;
          changed = true;
        }
      }
    }
    std::uint64_t r = 0;
    for (auto row : reach) r += static_cast<std::uint64_t>(std::popcount(row));
    return r;
  };
  auto orientation_of = [&](std::uint32_t mask) {
    std::vector<std::uint8_t> forward(m);
    for (int e = 0; e < m; ++e) forward[e] = ((mask >> e) & 1U) ? 0 : 1;
    return Orientation(g, std::move(forward));
  };

  OrientationRange out;
  std::uint32_t best_max = 0, best_min = 0;
  const std::uint64_t count = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const std::uint64_t r = evaluate(static_cast<std::uint32_t>(mask));
    if (mask == 0 || r > out.max_r) {
      out.max_r = r;
      best_max = static_cast<std::uint32_t>(mask);
    }
    if (mask == 0 || r < out.min_r) {
      out.min_r = r;
      best_min = static_cast<std::uint32_t>(mask);
    }
  }
  out.argmax = orientation_of(best_max);
  out.argmin = orientation_of(best_min);
  return out;
}

}  // namespace orient
