#include "orient/generate.hpp"

#include <algorithm>
#include <numeric>

namespace orient {
namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

void add_random_edges(Graph& g, int extra, Rng& rng) {
  const long long n = g.num_vertices();
  const long long room = n * (n - 1) / 2 - g.num_edges();
  extra = static_cast<int>(std::min<long long>(extra, room));
  while (extra > 0) {
    const int u = uniform(rng, 0, static_cast<int>(n) - 1), v = uniform(rng, 0, static_cast<int>(n) - 1);
    if (u == v || g.has_edge(u, v)) continue;
    g.add_edge(u, v);
    --extra;
  }
}

}  // namespace

Graph random_connected_graph(int n, int extra, Rng& rng) {
  Graph g(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 1; i < n; ++i) g.add_edge(perm[uniform(rng, 0, i - 1)], perm[i]);
  add_random_edges(g, extra, rng);
  return g;
}

Graph random_two_edge_connected_graph(int n, int extra, Rng& rng) {
  if (n < 3) return Graph(std::max(n, 0));
  Graph g(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (int i = 0; i < n; ++i) g.add_edge(perm[i], perm[(i + 1) % n]);
  add_random_edges(g, extra, rng);
  return g;
}

Graph random_graph_with_bridges(int n, int bridges, Rng& rng) {
  const int blocks = bridges + 1;
  // Sizes 1 or >= 3; a 2-vertex block would itself be a bridge.
  std::vector<int> sizes(blocks, 1);
  int remaining = std::max(0, n - blocks);
  if (remaining == 1) remaining = 2;
  while (remaining > 0) {
    const int b = uniform(rng, 0, blocks - 1);
    if (sizes[b] >= 3) {
      ++sizes[b];
      --remaining;
    } else if (remaining >= 2) {
      sizes[b] += 2;
      remaining -= 2;
    }
  }
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  Graph g(total);
  std::vector<int> first(blocks);
  int next = 0;
  for (int b = 0; b < blocks; ++b) {
    first[b] = next;
    const int s = sizes[b];
    if (s >= 3) {
      for (int i = 0; i < s; ++i) g.add_edge(next + i, next + (i + 1) % s);
      if (s >= 4) g.add_edge(next, next + s / 2);
    }
    next += s;
  }
  for (int b = 1; b < blocks; ++b) {
    const int parent = uniform(rng, 0, b - 1);
    g.add_edge(first[parent] + uniform(rng, 0, sizes[parent] - 1), first[b] + uniform(rng, 0, sizes[b] - 1));
  }
  return g;
}

WeightedTree random_weighted_tree(int b, Weight max_weight, Rng& rng) {
  std::uniform_int_distribution<Weight> wt(1, std::max<Weight>(1, max_weight));
  std::vector<Weight> weights(b);
  for (auto& w : weights) w = wt(rng);
  std::vector<Edge> edges;
  for (int v = 1; v < b; ++v) edges.push_back({uniform(rng, 0, v - 1), v});
  return WeightedTree(std::move(weights), std::move(edges));
}

Nae3SatInstance random_nae3sat(int vars, int clauses, Rng& rng) {
  Nae3SatInstance inst;
  inst.num_vars = vars;
  for (int c = 0; c < clauses; ++c) {
    Clause cl;
    for (auto& l : cl) l = {uniform(rng, 0, vars - 1), uniform(rng, 0, 1) == 1};
    inst.clauses.push_back(cl);
  }
  return inst;
}

}  // namespace orient
