#include "orient/wto.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace orient {

double parse_epsilon(const std::string& text) {
  auto to_double = [&](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) throw std::invalid_argument("bad epsilon '" + text + "'");
    return v;
  };
  double value;
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const double den = to_double(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("bad epsilon '" + text + "'");
    value = to_double(text.substr(0, slash)) / den;
  } else {
    value = to_double(text);
  }
  if (!(value > 0 && value <= 1)) throw std::invalid_argument("epsilon must lie in (0, 1]");
  return value;
}

Partition balanced_partition_fptas(std::span<const Weight> weights, const ApproxParams& params) {
  if (!(params.epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (weights.empty()) throw std::invalid_argument("partition needs at least one weight");
  Weight total = 0;
  for (Weight w : weights) {
    if (w < 1) throw std::invalid_argument("partition weights must be positive");
    if (total > std::numeric_limits<Weight>::max() - w) throw std::invalid_argument("partition weight total overflows");
    total += w;
  }
  const Weight cap = total / 2;
  const long double delta = static_cast<long double>(params.epsilon) / (2.0L * static_cast<long double>(weights.size()));

  // Each kept sum remembers the item that produced it and its predecessor.
  struct Node {
    Weight sum;
    int item;
    int prev;
  };
  std::vector<Node> pool{{0, -1, -1}};
  std::vector<int> list{0}, shifted, merged;
  for (int i = 0; i < static_cast<int>(weights.size()); ++i) {
    shifted.clear();
    for (int id : list) {
      const Weight s = pool[id].sum + weights[i];
      if (s > cap) break;
      pool.push_back({s, i, id});
      shifted.push_back(static_cast<int>(pool.size()) - 1);
    }
    merged.clear();
    std::merge(list.begin(), list.end(), shifted.begin(), shifted.end(), std::back_inserter(merged),
               [&](int a, int b) { return pool[a].sum < pool[b].sum; });
    list.clear();
    for (int id : merged) {
      if (!list.empty()) {
        const Weight last = pool[list.back()].sum;
        if (pool[id].sum == last) continue;
        if (static_cast<long double>(pool[id].sum) <= static_cast<long double>(last) * (1.0L + delta)) continue;
      }
      list.push_back(id);
    }
  }

  Partition out;
  int best = list.back();
  out.sum = pool[best].sum;
  for (int id = best; pool[id].item >= 0; id = pool[id].prev) out.subset.push_back(pool[id].item);
  std::sort(out.subset.begin(), out.subset.end());
  out.product = static_cast<Wide>(out.sum) * static_cast<Wide>(total - out.sum);
  return out;
}

WtoResult wto_solve(const WeightedTree& t, const ApproxParams& params) {
  if (!(params.epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  const int c = find_centroid(t).front();
  // Branch weights: total weight of each component of T - c.
  std::vector<int> neighbours;
  std::vector<Weight> branch;
  {
    std::vector<int> owner(t.size(), -1);
    std::vector<int> stack;
    owner[c] = -2;
    for (const auto& [w, e] : t.incident(c)) {
      const int idx = static_cast<int>(neighbours.size());
      neighbours.push_back(w);
      Weight sum = 0;
      owner[w] = idx;
      stack.push_back(w);
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        sum += t.weight(v);
        for (const auto& [x, f] : t.incident(v)) {
          if (owner[x] != -1) continue;
          owner[x] = idx;
          stack.push_back(x);
        }
      }
      branch.push_back(sum);
    }
  }
  WtoResult res;
  Partition part;
  const Weight branch_total = t.total_weight() - t.weight(c);
  if (branch_total <= params.exact_budget) {
    part = balanced_partition_exact(branch, params.exact_budget);
  } else {
    part = balanced_partition_fptas(branch, params);
    res.exact = false;
  }
  std::vector<int> toward;
  for (int i : part.subset) toward.push_back(neighbours[i]);
  res.solution = orient_around_centroid(t, c, toward);
  return res;
}

BruteForceTree brute_force_tree_orientation(const WeightedTree& t) {
  const int b = t.size();
  if (b > kBruteForceTreeLimit)
    throw SizeLimitError("brute-force tree orientation limited to " + std::to_string(kBruteForceTreeLimit) +
                         " vertices, got " + std::to_string(b));
  const int m = b - 1;
  const auto& edges = t.edges();
  BruteForceTree best;
  best.orientation.tree = t;
  best.orientation.forward.assign(m, 1);
  if (m == 0) return best;

  std::vector<int> outdeg(b), queue(b);
  std::vector<std::vector<int>> in(b);
  std::vector<Weight> below(b);  // total weight strictly reachable from v
  bool have = false;
  // Reversing every edge preserves mu, so fix the direction of edge 0.
  const std::uint32_t limit = std::uint32_t{1} << (m - 1);
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    const std::uint32_t mask = bits << 1;
    for (int v = 0; v < b; ++v) {
      in[v].clear();
      outdeg[v] = 0;
      below[v] = 0;
    }
    for (int e = 0; e < m; ++e) {
      const bool fwd = ((mask >> e) & 1U) == 0;
      const int tail = fwd ? edges[e].u : edges[e].v, head = fwd ? edges[e].v : edges[e].u;
      ++outdeg[tail];
      in[head].push_back(tail);
    }
    // Sinks first. Out-branches of a tree vertex reach disjoint vertex sets.
    int qh = 0, qt = 0;
    for (int v = 0; v < b; ++v)
      if (outdeg[v] == 0) queue[qt++] = v;
    Wide value = 0;
    while (qh < qt) {
      const int w = queue[qh++];
      value += static_cast<Wide>(t.weight(w)) * static_cast<Wide>(below[w]);
      for (int v : in[w]) {
        below[v] += t.weight(w) + below[w];
        if (--outdeg[v] == 0) queue[qt++] = v;
      }
    }
    if (!have || value > best.mu) {
      have = true;
      best.mu = value;
      for (int e = 0; e < m; ++e) best.orientation.forward[e] = ((mask >> e) & 1U) == 0 ? 1 : 0;
    }
  }
  return best;
}

}  // namespace orient
