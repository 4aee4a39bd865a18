#pragma once

#include <span>
#include <string>

#include "orient/tree_orient.hpp"

namespace orient {

struct ApproxParams {
  double epsilon = 0.1;  // in (0, 1]
  Weight exact_budget = kDefaultExactBudget;
};

/// Accepts "0.05" or "1/20".
double parse_epsilon(const std::string& text);

/// Subset-sum approximation of the balanced partition. Keeps a sorted list
/// of achievable sums capped at W/2 and, after each weight, drops any sum
/// within a factor 1 + eps/(2k) of the previous kept one. The returned
/// product is at least (1 - eps) times the best achievable.
Partition balanced_partition_fptas(std::span<const Weight> weights, const ApproxParams& params);

struct WtoResult {
  TreeSolution solution;
  bool exact = true;  // false: mu is guaranteed only within (1 - eps)
};

/// Centroid orientation using the exact DP when the branch total fits the
/// budget and the approximation otherwise.
WtoResult wto_solve(const WeightedTree& t, const ApproxParams& params);

inline constexpr int kBruteForceTreeLimit = 22;

struct BruteForceTree {
  TreeOrientation orientation;
  Wide mu = 0;
};

/// Best of all 2^(b-1) orientations. Throws SizeLimitError for b > 22.
BruteForceTree brute_force_tree_orientation(const WeightedTree& t);

}  // namespace orient
