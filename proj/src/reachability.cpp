#include "orient/reachability.hpp"

#include <algorithm>
#include <bit>

namespace orient {

SccDecomposition strongly_connected_components(const Digraph& d) {
  // Iterative Tarjan.
  const int n = d.num_vertices();
  SccDecomposition out;
  out.component_of.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0), stack, cursor(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> call;
  int counter = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back(root);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      const int v = call.back();
      const auto succ = d.successors(v);
      if (cursor[v] < static_cast<int>(succ.size())) {
        const int w = succ[cursor[v]++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back(w);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          out.component_of[w] = out.count;
        } while (w != v);
        ++out.count;
      }
    }
  }
  return out;
}

bool is_strongly_connected(const Digraph& d) { return strongly_connected_components(d).count <= 1; }
bool is_strongly_connected(const Orientation& o) { return is_strongly_connected(o.to_digraph()); }

bool is_acyclic(const Digraph& d) {
  for (const Edge& a : d.arcs())
    if (a.u == a.v) return false;
  return strongly_connected_components(d).count == d.num_vertices();
}
bool is_acyclic(const Orientation& o) { return is_acyclic(o.to_digraph()); }

ReachabilityReport count_reachability(const Digraph& d, bool with_pairs) {
  const int n = d.num_vertices();
  const auto scc = strongly_connected_components(d);
  const int k = scc.count;
  std::vector<std::uint64_t> size(k, 0);
  for (int v = 0; v < n; ++v) ++size[scc.component_of[v]];

  // Successor lists of the condensation.
  std::vector<std::vector<int>> next(k);
  for (const Edge& a : d.arcs()) {
    const int cu = scc.component_of[a.u], cv = scc.component_of[a.v];
    if (cu != cv) next[cu].push_back(cv);
  }

  // Component ids are reverse topological, so successors have smaller ids and
  // are complete by the time we reach c.
  const std::size_t words = (static_cast<std::size_t>(k) + 63) / 64;
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(k) * words, 0);
  ReachabilityReport report;
  for (int c = 0; c < k; ++c) {
    std::uint64_t* row = reach.data() + static_cast<std::size_t>(c) * words;
    for (int s : next[c]) {
      const std::uint64_t* other = reach.data() + static_cast<std::size_t>(s) * words;
      for (std::size_t i = 0; i < words; ++i) row[i] |= other[i];
      row[s / 64] |= std::uint64_t{1} << (s % 64);
    }
    std::uint64_t reached = 0;
    for (std::size_t i = 0; i < words; ++i) {
      for (std::uint64_t bits = row[i]; bits != 0; bits &= bits - 1)
        reached += size[i * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
    }
    report.r += size[c] * (size[c] - 1) + size[c] * reached;
  }

  if (with_pairs) {
    std::vector<std::vector<int>> members(k);
    for (int v = 0; v < n; ++v) members[scc.component_of[v]].push_back(v);
    std::vector<Edge> pairs;
    pairs.reserve(report.r);
    for (int x = 0; x < n; ++x) {
      const int c = scc.component_of[x];
      const std::uint64_t* row = reach.data() + static_cast<std::size_t>(c) * words;
      for (int y = 0; y < n; ++y) {
        const int cy = scc.component_of[y];
        if (x == y) continue;
        if (cy == c || ((row[cy / 64] >> (cy % 64)) & 1U)) pairs.push_back({x, y});
      }
    }
    report.pairs = std::move(pairs);
  }
  return report;
}

ReachabilityReport count_reachability(const Orientation& o, bool with_pairs) {
  return count_reachability(o.to_digraph(), with_pairs);
}

}  // namespace orient
