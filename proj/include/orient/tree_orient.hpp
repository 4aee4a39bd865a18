#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orient/bridges.hpp"
#include "orient/graph.hpp"
#include "orient/reachability.hpp"

namespace orient {

/// Direction per tree edge; forward means edges()[e].u -> edges()[e].v.
struct TreeOrientation {
  WeightedTree tree;
  std::vector<std::uint8_t> forward;

  int tail(int e) const { return forward.at(e) ? tree.edges()[e].u : tree.edges()[e].v; }
  int head(int e) const { return forward.at(e) ? tree.edges()[e].v : tree.edges()[e].u; }
};

/// Weighted reachability: sum of wt(v) * wt(w) over ordered pairs v != w
/// with a directed path v -> w. Direct evaluation, O(b^2).
Wide mu(const TreeOrientation& t);

/// All vertices minimizing the heaviest component left after their removal.
/// One vertex or two adjacent ones, ascending.
std::vector<int> find_centroid(const WeightedTree& t);

/// mu of the tree with every edge pointing toward `root` (the all-away
/// orientation has the same value): sum over y of wt(y) * (||T_y|| - wt(y)).
Wide mu_star(const WeightedTree& t, int root);

inline constexpr Weight kDefaultExactBudget = 1'000'000;

/// Subset of a weight list, its sum p and the product p * (W - p).
struct Partition {
  std::vector<int> subset;  // ascending indices into the weight list
  Weight sum = 0;
  Wide product = 0;
};

/// Subset sum p <= W/2 maximizing p * (W - p), by O(k W) dynamic programming
/// over reachable sums. Throws BudgetExceededError when W > budget.
Partition balanced_partition_exact(std::span<const Weight> weights, Weight budget = kDefaultExactBudget);

/// Value of a centroid orientation split into its three parts.
struct MuReport {
  Wide mu = 0;
  Wide center_term = 0;        // ||c|| * ||T - c||
  Wide partition_product = 0;  // (sum over I) * (sum over I-bar)
  Wide subtree_sum = 0;        // sum of mu* over the subtrees at c
  int centroid = 0;
  std::vector<int> toward;  // neighbours of c whose subtrees point toward c
  std::vector<int> away;
};

struct TreeSolution {
  TreeOrientation orientation;
  MuReport report;
};

/// Orientation with every subtree at `centroid` uniform: subtrees rooted at
/// the listed neighbours point entirely toward the centroid, the rest entirely
/// away.
TreeSolution orient_around_centroid(const WeightedTree& t, int centroid, std::span<const int> toward);

/// Maximum-mu orientation: a centroid with its subtrees split by exact
/// balanced partition of their weights.
TreeSolution optimal_tree_orientation(const WeightedTree& t, Weight budget = kDefaultExactBudget);

struct MaxReachResult {
  Orientation orientation;
  ReachabilityReport reach;  // r from the identity mu + sum |C|(|C|-1)
  Wide mu = 0;
  std::uint64_t component_pairs = 0;
  Condensation condensation;
  TreeSolution tree;
};

/// Reachability-maximizing orientation of a connected graph in O(n^2):
/// bridges follow the optimal orientation of the bridge tree, every
/// 2-edge-connected component is oriented strongly.
MaxReachResult max_reachability_orientation(const Graph& g);

}  // namespace orient
