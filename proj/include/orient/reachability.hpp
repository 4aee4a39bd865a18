#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

/// R of a digraph: ordered pairs (x, y), x != y, joined by a directed path.
struct ReachabilityReport {
  std::uint64_t r = 0;
  std::optional<std::vector<Edge>> pairs;  // sorted, present on request
};

ReachabilityReport count_reachability(const Digraph& d, bool with_pairs = false);
ReachabilityReport count_reachability(const Orientation& o, bool with_pairs = false);

/// Strongly connected components. Component ids form a reverse topological
/// order of the condensation: every arc between components goes from a higher
/// id to a lower one.
struct SccDecomposition {
  int count = 0;
  std::vector<int> component_of;
};

SccDecomposition strongly_connected_components(const Digraph& d);

bool is_strongly_connected(const Digraph& d);
bool is_strongly_connected(const Orientation& o);
bool is_acyclic(const Digraph& d);
bool is_acyclic(const Orientation& o);

}  // namespace orient
