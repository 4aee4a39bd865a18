#pragma once

#include <vector>

#include "orient/graph.hpp"

namespace orient {

/// Indices of the cut edges of a connected graph, ascending. Throws
/// InfeasibleError on disconnected input.
std::vector<int> find_bridges(const Graph& g);

/// Correspondence between a graph and its bridge tree.
struct CondensationMap {
  std::vector<int> component_of;              // graph vertex -> tree vertex
  std::vector<std::vector<int>> members_of;   // tree vertex -> sorted graph vertices
  std::vector<int> bridge_of_tree_edge;       // tree edge -> graph edge index
};

struct Condensation {
  WeightedTree tree;
  CondensationMap map;
};

/// Contracts every 2-edge-connected component to a vertex weighted by its
/// size. Tree vertices are numbered by their smallest member; tree edge i
/// joins the components of the i-th bridge (ascending edge index) and keeps
/// that bridge's endpoint order.
Condensation condense(const Graph& g);

}  // namespace orient
