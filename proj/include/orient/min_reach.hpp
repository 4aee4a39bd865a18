#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

/// Transitive orientation, if the graph is a comparability graph.
///
/// Implication classes are peeled off one at a time: orient the lowest
/// remaining edge, force through the current edge set with
///   a->b, bc in E, ac not in E  =>  c->b
///   a->b, ac in E, bc not in E  =>  a->c
/// and remove the class. A class that forces some edge both ways means the
/// graph is not a comparability graph. The union of the classes is checked
/// for transitivity before it is returned.
std::optional<Orientation> is_transitively_orientable(const Graph& g);

/// For every a->b->c the edge ac exists and points a->c.
bool is_transitive(const Orientation& o);

struct MinReachResult {
  std::uint64_t r = 0;
  Orientation orientation;  // acyclic
  std::uint64_t closure_edges_added = 0;  // r - |E|
};

inline constexpr int kMinReachMaxVertices = 10;
inline constexpr int kCompletionMaxVertices = 9;

/// Minimum R over all orientations. Minimal orientations are acyclic and every
/// acyclic orientation is induced by a vertex order, so enumerating the n!
/// orders is exhaustive. Throws SizeLimitError when n > max_n.
MinReachResult min_reachability_bruteforce(const Graph& g, int max_n = kMinReachMaxVertices);

struct CompletionResult {
  std::uint64_t added_count = 0;
  std::vector<Edge> added;  // sorted, u < v
};

/// Fewest edges whose addition yields a comparability graph, by trying
/// non-edge subsets in order of increasing size.
CompletionResult comparability_completion_bruteforce(const Graph& g, int max_n = kCompletionMaxVertices);

/// Edge count of the transitive closure of an acyclic orientation; equals R.
/// Throws std::invalid_argument on a cyclic orientation.
std::uint64_t transitive_closure_count(const Orientation& o);

}  // namespace orient
