#pragma once

#include <random>

#include "orient/gadgets.hpp"
#include "orient/graph.hpp"

namespace orient {

using Rng = std::mt19937_64;

/// Random spanning tree plus `extra` further random edges (capped by the
/// number of vertex pairs).
Graph random_connected_graph(int n, int extra, Rng& rng);

/// Random Hamiltonian cycle plus `extra` chords; 2-edge-connected for n >= 3.
Graph random_two_edge_connected_graph(int n, int extra, Rng& rng);

/// Chain of 2-edge-connected blocks (cycles with a chord when large enough,
/// or single vertices) joined by `bridges` bridges in a random tree shape.
/// Vertex count is approximately `n`.
Graph random_graph_with_bridges(int n, int bridges, Rng& rng);

WeightedTree random_weighted_tree(int b, Weight max_weight, Rng& rng);

Nae3SatInstance random_nae3sat(int vars, int clauses, Rng& rng);

}  // namespace orient
