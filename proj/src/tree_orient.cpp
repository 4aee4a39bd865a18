#include "orient/tree_orient.hpp"

#include <algorithm>
#include <limits>

#include "orient/strong_orient.hpp"

namespace orient {
namespace {

struct Rooted {
  std::vector<int> parent, parent_edge, order;  // order is BFS from the root
  std::vector<Weight> subtree;                  // ||T_v||
};

Rooted root_at(const WeightedTree& t, int root) {
  const int b = t.size();
  Rooted r;
  r.parent.assign(b, -1);
  r.parent_edge.assign(b, -1);
  r.order.reserve(b);
  r.order.push_back(root);
  for (std::size_t i = 0; i < r.order.size(); ++i) {
    const int v = r.order[i];
    for (const auto& [w, e] : t.incident(v)) {
      if (e == r.parent_edge[v]) continue;
      r.parent[w] = v;
      r.parent_edge[w] = e;
      r.order.push_back(w);
    }
  }
  r.subtree.assign(t.weights().begin(), t.weights().end());
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it)
    if (r.parent[*it] != -1) r.subtree[r.parent[*it]] += r.subtree[*it];
  return r;
}

Wide product(Weight a, Weight b) { return static_cast<Wide>(a) * static_cast<Wide>(b); }

}  // namespace

Wide mu(const TreeOrientation& t) {
  const int b = t.tree.size();
  if (static_cast<int>(t.forward.size()) != b - 1) throw std::invalid_argument("tree orientation size mismatch");
  std::vector<std::vector<int>> out(b);
  for (int e = 0; e < b - 1; ++e) out[t.tail(e)].push_back(t.head(e));
  Wide total = 0;
  std::vector<int> stack;
  for (int v = 0; v < b; ++v) {
    // Out-paths from v never revisit a vertex in a tree.
    Weight reached = 0;
    stack.assign(out[v].begin(), out[v].end());
    while (!stack.empty()) {
      const int w = stack.back();
      stack.pop_back();
      reached += t.tree.weight(w);
      stack.insert(stack.end(), out[w].begin(), out[w].end());
    }
    total += product(t.tree.weight(v), reached);
  }
  return total;
}

std::vector<int> find_centroid(const WeightedTree& t) {
  const Rooted r = root_at(t, 0);
  const Weight total = t.total_weight();
  std::vector<Weight> heaviest(t.size(), 0);
  for (int v = 0; v < t.size(); ++v) heaviest[v] = total - r.subtree[v];
  for (int v = 0; v < t.size(); ++v)
    if (r.parent[v] != -1) heaviest[r.parent[v]] = std::max(heaviest[r.parent[v]], r.subtree[v]);
  const Weight best = *std::min_element(heaviest.begin(), heaviest.end());
  std::vector<int> out;
  for (int v = 0; v < t.size(); ++v)
    if (heaviest[v] == best) out.push_back(v);
  return out;
}

Wide mu_star(const WeightedTree& t, int root) {
  if (root < 0 || root >= t.size()) throw std::out_of_range("mu_star root out of range");
  const Rooted r = root_at(t, root);
  Wide total = 0;
  for (int v = 0; v < t.size(); ++v) total += product(t.weight(v), r.subtree[v] - t.weight(v));
  return total;
}

Partition balanced_partition_exact(std::span<const Weight> weights, Weight budget) {
  Weight total = 0;
  for (Weight w : weights) {
    if (w < 1) throw std::invalid_argument("partition weights must be positive");
    if (total > std::numeric_limits<Weight>::max() - w) throw BudgetExceededError("partition weight total overflows");
    total += w;
  }
  if (total > budget)
    throw BudgetExceededError("partition weight total " + std::to_string(total) + " exceeds exact budget " +
                              std::to_string(budget));

  // first[s]: index of the item that first made sum s reachable; -2 for s = 0.
  const Weight half = total / 2;
  std::vector<int> first(static_cast<std::size_t>(half) + 1, -1);
  first[0] = -2;
  Weight prefix = 0;
  for (int i = 0; i < static_cast<int>(weights.size()); ++i) {
    const Weight w = weights[i];
    prefix += w;
    for (Weight s = std::min(prefix, half); s >= w; --s)
      if (first[s] == -1 && first[s - w] != -1) first[s] = i;
  }
  Partition out;
  out.sum = half;
  while (first[out.sum] == -1) --out.sum;
  for (Weight s = out.sum; s > 0; s -= weights[first[s]]) out.subset.push_back(first[s]);
  std::sort(out.subset.begin(), out.subset.end());
  out.product = product(out.sum, total - out.sum);
  return out;
}

TreeSolution orient_around_centroid(const WeightedTree& t, int centroid, std::span<const int> toward) {
  const int b = t.size();
  const Rooted r = root_at(t, centroid);
  std::vector<char> branch_toward(b, 0);
  for (int v : toward) {
    if (v < 0 || v >= b || r.parent[v] != centroid) throw std::invalid_argument("not a neighbour of the centroid");
    branch_toward[v] = 1;
  }
  // Propagate the branch decision down each subtree.
  std::vector<char> toward_c(b, 0);
  for (int v : r.order) {
    if (v == centroid) continue;
    toward_c[v] = r.parent[v] == centroid ? branch_toward[v] : toward_c[r.parent[v]];
  }

  TreeSolution sol;
  sol.orientation.tree = t;
  sol.orientation.forward.assign(b > 0 ? b - 1 : 0, 1);
  MuReport& rep = sol.report;
  rep.centroid = centroid;
  Weight in_sum = 0, out_sum = 0;
  for (int v : r.order) {
    if (v == centroid) continue;
    const int e = r.parent_edge[v];
    const int p = r.parent[v];
    // Toward c: child -> parent. Away: parent -> child.
    const int tail = toward_c[v] ? v : p;
    sol.orientation.forward[e] = t.edges()[e].u == tail ? 1 : 0;
    rep.subtree_sum += product(t.weight(v), r.subtree[v] - t.weight(v));
    if (p == centroid) {
      if (toward_c[v]) {
        rep.toward.push_back(v);
        in_sum += r.subtree[v];
      } else {
        rep.away.push_back(v);
        out_sum += r.subtree[v];
      }
    }
  }
  std::sort(rep.toward.begin(), rep.toward.end());
  std::sort(rep.away.begin(), rep.away.end());
  rep.center_term = product(t.weight(centroid), t.total_weight() - t.weight(centroid));
  rep.partition_product = product(in_sum, out_sum);
  rep.mu = rep.center_term + rep.partition_product + rep.subtree_sum;
  return sol;
}

TreeSolution optimal_tree_orientation(const WeightedTree& t, Weight budget) {
  const int c = find_centroid(t).front();
  std::vector<int> neighbours;
  std::vector<Weight> branch;
  const Rooted r = root_at(t, c);
  for (const auto& [w, e] : t.incident(c)) {
    neighbours.push_back(w);
    branch.push_back(r.subtree[w]);
  }
  const Partition part = balanced_partition_exact(branch, budget);
  std::vector<int> toward;
  for (int i : part.subset) toward.push_back(neighbours[i]);
  return orient_around_centroid(t, c, toward);
}

MaxReachResult max_reachability_orientation(const Graph& g) {
  if (g.num_vertices() == 0) throw std::invalid_argument("graph has no vertices");
  MaxReachResult res;
  res.condensation = condense(g);
  const WeightedTree& tree = res.condensation.tree;
  const CondensationMap& map = res.condensation.map;
  // Branch weights at the centroid sum to at most n, so the DP is always exact.
  res.tree = optimal_tree_orientation(tree, std::max(kDefaultExactBudget, tree.total_weight()));

  std::vector<char> is_bridge(g.num_edges(), 0);
  for (int e : map.bridge_of_tree_edge) is_bridge[e] = 1;
  auto forward = orient_components_strongly(g, is_bridge);
  for (int te = 0; te < static_cast<int>(map.bridge_of_tree_edge.size()); ++te)
    forward[map.bridge_of_tree_edge[te]] = res.tree.orientation.forward[te];
  res.orientation = Orientation(g, std::move(forward));

  for (const auto& members : map.members_of) {
    const auto s = static_cast<std::uint64_t>(members.size());
    res.component_pairs += s * (s - 1);
  }
  res.mu = res.tree.report.mu;
  res.reach.r = static_cast<std::uint64_t>(res.mu) + res.component_pairs;
  return res;
}

}  // namespace orient
