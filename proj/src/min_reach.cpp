#include "orient/min_reach.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "orient/reachability.hpp"

namespace orient {

std::optional<Orientation> is_transitively_orientable(const Graph& g) {
  const int m = g.num_edges();
  std::vector<char> alive(m, 1);
  std::vector<int> mark(m, -1);  // direction within the class being built
  std::vector<std::uint8_t> forward(m, 1);
  std::vector<Edge> queue;  // arcs
  std::vector<int> touched;

  auto alive_edge = [&](int a, int c) {
    const auto idx = g.edge_index(a, c);
    return idx && alive[*idx];
  };

  for (int seed = 0; seed < m; ++seed) {
    if (!alive[seed]) continue;
    queue.clear();
    touched.clear();
    bool conflict = false;
    auto force = [&](int x, int y) {
      const int f = *g.edge_index(x, y);
      const int dir = g.edge(f).u == x ? 0 : 1;
      if (mark[f] == -1) {
        mark[f] = dir;
        touched.push_back(f);
        queue.push_back({x, y});
      } else if (mark[f] != dir) {
        conflict = true;
      }
    };
    force(g.edge(seed).u, g.edge(seed).v);
    for (std::size_t qi = 0; qi < queue.size() && !conflict; ++qi) {
      const auto [a, b] = queue[qi];
      for (const auto& [c, e] : g.incident(b))
        if (alive[e] && c != a && !alive_edge(a, c)) force(c, b);
      for (const auto& [c, e] : g.incident(a))
        if (alive[e] && c != b && !alive_edge(b, c)) force(a, c);
    }
    if (conflict) return std::nullopt;
    for (int f : touched) {
      forward[f] = mark[f] == 0 ? 1 : 0;
      alive[f] = 0;
      mark[f] = -1;
    }
  }

  Orientation o(g, std::move(forward));
  if (!is_transitive(o)) throw std::logic_error("implication-class orientation is not transitive");
  return o;
}

bool is_transitive(const Orientation& o) {
  const Graph& g = o.graph();
  std::vector<std::vector<int>> out(g.num_vertices());
  for (int e = 0; e < g.num_edges(); ++e) out[o.tail(e)].push_back(o.head(e));
  for (int a = 0; a < g.num_vertices(); ++a) {
    for (int b : out[a]) {
      for (int c : out[b]) {
        const auto idx = g.edge_index(a, c);
        if (!idx || o.tail(*idx) != a) return false;
      }
    }
  }
  return true;
}

MinReachResult min_reachability_bruteforce(const Graph& g, int max_n) {
  const int n = g.num_vertices();
  if (n > max_n)
    throw SizeLimitError("minimum reachability enumeration limited to " + std::to_string(max_n) +
                         " vertices, got " + std::to_string(n));
  if (n > 16) throw SizeLimitError("minimum reachability enumeration needs n <= 16");

  std::vector<std::uint32_t> adjacent(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adjacent[u] |= 1U << v;
    adjacent[v] |= 1U << u;
  }
  std::vector<int> order(n), pos(n), best_order;
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::uint32_t> reach(n);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::uint64_t r = 0;
    for (int i = n - 1; i >= 0 && r < best; --i) {
      const int v = order[i];
      std::uint32_t mask = 0;
      for (std::uint32_t later = adjacent[v]; later != 0; later &= later - 1) {
        const int w = std::countr_zero(later);
        if (pos[w] > i) mask |= (1U << w) | reach[w];
      }
      reach[v] = mask;
      r += static_cast<std::uint64_t>(std::popcount(mask));
    }
    if (r < best) {
      best = r;
      best_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  for (int i = 0; i < n; ++i) pos[best_order[i]] = i;
  std::vector<std::uint8_t> forward(g.num_edges());
  for (int e = 0; e < g.num_edges(); ++e) forward[e] = pos[g.edge(e).u] < pos[g.edge(e).v] ? 1 : 0;
  MinReachResult res;
  res.orientation = Orientation(g, std::move(forward));
  res.r = n == 0 ? 0 : best;
  res.closure_edges_added = res.r - static_cast<std::uint64_t>(g.num_edges());
  return res;
}

CompletionResult comparability_completion_bruteforce(const Graph& g, int max_n) {
  const int n = g.num_vertices();
  if (n > max_n)
    throw SizeLimitError("comparability completion search limited to " + std::to_string(max_n) +
                         " vertices, got " + std::to_string(n));
  std::vector<Edge> missing;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) missing.push_back({u, v});

  const int total = static_cast<int>(missing.size());
  for (int k = 0; k <= total; ++k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      Graph h = g;
      for (int i : pick) h.add_edge(missing[i].u, missing[i].v);
      if (is_transitively_orientable(h)) {
        CompletionResult res;
        res.added_count = static_cast<std::uint64_t>(k);
        for (int i : pick) res.added.push_back(missing[i]);
        return res;
      }
      // Next k-combination in lexicographic order.
      int i = k - 1;
      while (i >= 0 && pick[i] == total - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("complete graph must be a comparability graph");
}

std::uint64_t transitive_closure_count(const Orientation& o) {
  const Digraph d = o.to_digraph();
  if (!is_acyclic(d)) throw std::invalid_argument("transitive closure count needs an acyclic orientation");
  return count_reachability(d).r;
}

}  // namespace orient
