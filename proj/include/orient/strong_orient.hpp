#pragma once

#include <optional>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

/// Strong orientation of a 2-edge-connected graph (Robbins). DFS tree edges
/// point away from the root, every other edge points from descendant to
/// ancestor. Throws InfeasibleError naming a bridge, or on disconnected input.
Orientation strong_orientation(const Graph& g);

/// DFS orientation restricted to the non-bridge edges: each 2-edge-connected
/// component comes out strongly connected. Entries for edges flagged in
/// `is_bridge` are left at 1 for the caller to overwrite.
std::vector<std::uint8_t> orient_components_strongly(const Graph& g, const std::vector<char>& is_bridge);

/// A cut (X, V - X) whose edges are all arcs pointing the same way, if any.
/// Found as a source component of the mixed graph traversed with undirected
/// edges usable both ways; the component with the smallest vertex is chosen.
std::optional<OneWayCutWitness> find_one_way_cut(const MixedGraph& m);

/// Direct check of a witness against the mixed graph.
bool verify_one_way_cut(const MixedGraph& m, const OneWayCutWitness& w);

/// Whether the partial orientation extends to a strongly connected one.
bool can_complete_strong(const MixedGraph& m);

/// Extends the fixed arcs of `m` to a strong orientation. Undirected edges
/// are fixed one at a time in index order, forward first, keeping the
/// partial orientation completable. Throws InfeasibleError carrying a bridge
/// or a one-way cut when no completion exists.
Orientation complete_strong(const MixedGraph& m);

}  // namespace orient
