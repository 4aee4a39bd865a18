#include "orient/bridges.hpp"

#include <algorithm>

namespace orient {

std::vector<int> find_bridges(const Graph& g) {
  const int n = g.num_vertices();
  if (!g.is_connected()) throw InfeasibleError("graph is disconnected");
  std::vector<int> bridges;
  if (n == 0) return bridges;

  std::vector<int> disc(n, -1), low(n, 0), parent_edge(n, -1), cursor(n, 0);
  std::vector<int> call{0};
  int counter = 0;
  disc[0] = low[0] = counter++;
  while (!call.empty()) {
    const int v = call.back();
    const auto inc = g.incident(v);
    if (cursor[v] < static_cast<int>(inc.size())) {
      const auto [w, e] = inc[cursor[v]++];
      if (e == parent_edge[v]) continue;
      if (disc[w] == -1) {
        disc[w] = low[w] = counter++;
        parent_edge[w] = e;
        call.push_back(w);
      } else {
        low[v] = std::min(low[v], disc[w]);
      }
      continue;
    }
    call.pop_back();
    if (!call.empty()) {
      const int p = call.back();
      low[p] = std::min(low[p], low[v]);
      if (low[v] > disc[p]) bridges.push_back(parent_edge[v]);
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

Condensation condense(const Graph& g) {
  const auto bridges = find_bridges(g);
  const int n = g.num_vertices();
  std::vector<char> is_bridge(g.num_edges(), 0);
  for (int e : bridges) is_bridge[e] = 1;

  CondensationMap map;
  map.component_of.assign(n, -1);
  std::vector<Weight> weights;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (map.component_of[s] != -1) continue;
    const int c = static_cast<int>(map.members_of.size());
    map.members_of.emplace_back();
    map.component_of[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      map.members_of[c].push_back(v);
      for (const auto& [w, e] : g.incident(v)) {
        if (is_bridge[e] || map.component_of[w] != -1) continue;
        map.component_of[w] = c;
        stack.push_back(w);
      }
    }
    std::sort(map.members_of[c].begin(), map.members_of[c].end());
    weights.push_back(static_cast<Weight>(map.members_of[c].size()));
  }

  std::vector<Edge> tree_edges;
  tree_edges.reserve(bridges.size());
  for (int e : bridges) {
    const Edge& ed = g.edge(e);
    tree_edges.push_back({map.component_of[ed.u], map.component_of[ed.v]});
  }
  map.bridge_of_tree_edge = bridges;
  if (n == 0) return {WeightedTree{}, std::move(map)};
  return {WeightedTree(std::move(weights), std::move(tree_edges)), std::move(map)};
}

}  // namespace orient
