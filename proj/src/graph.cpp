#include "orient/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace orient {

Graph::Graph(int n) : n_(n), adj_(n < 0 ? 0 : n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  index_.reserve(edges.size());
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

std::uint64_t Graph::key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

int Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  const int id = num_edges();
  if (!index_.emplace(key(u, v), id).second) throw std::invalid_argument("duplicate edge");
  edges_.push_back({u, v});
  adj_[u].push_back({v, id});
  adj_[v].push_back({u, id});
  return id;
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u == v) return std::nullopt;
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [w, e] : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

Digraph::Digraph(int n, std::span<const Edge> arcs)
    : n_(n), arcs_(arcs.begin(), arcs.end()), offsets_(n + 1, 0), targets_(arcs.size()) {
  for (const Edge& a : arcs_) {
    if (a.u < 0 || a.u >= n || a.v < 0 || a.v >= n) throw std::invalid_argument("arc endpoint out of range");
    ++offsets_[a.u + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& a : arcs_) targets_[fill[a.u]++] = a.v;
}

Orientation::Orientation(Graph graph)
    : graph_(std::move(graph)), forward_(graph_.num_edges(), 1) {}

Orientation::Orientation(Graph graph, std::vector<std::uint8_t> forward)
    : graph_(std::move(graph)), forward_(std::move(forward)) {
  if (static_cast<int>(forward_.size()) != graph_.num_edges())
    throw std::invalid_argument("orientation needs exactly one direction per edge");
}

std::vector<Edge> Orientation::arcs() const {
  std::vector<Edge> out;
  out.reserve(forward_.size());
  for (int e = 0; e < graph_.num_edges(); ++e) out.push_back(arc(e));
  return out;
}

Digraph Orientation::to_digraph() const {
  const auto a = arcs();
  return Digraph(graph_.num_vertices(), a);
}

MixedGraph::MixedGraph(Graph g) : graph(std::move(g)), state(graph.num_edges(), EdgeState::Undirected) {}

MixedGraph::MixedGraph(Graph g, std::vector<EdgeState> s) : graph(std::move(g)), state(std::move(s)) {
  if (static_cast<int>(state.size()) != graph.num_edges())
    throw std::invalid_argument("mixed graph needs one state per edge");
}

Digraph MixedGraph::to_traversal_digraph() const {
  std::vector<Edge> arcs;
  arcs.reserve(2 * state.size());
  for (int e = 0; e < graph.num_edges(); ++e) {
    const Edge& ed = graph.edge(e);
    switch (state[e]) {
      case EdgeState::Forward: arcs.push_back({ed.u, ed.v}); break;
      case EdgeState::Backward: arcs.push_back({ed.v, ed.u}); break;
      case EdgeState::Undirected:
        arcs.push_back({ed.u, ed.v});
        arcs.push_back({ed.v, ed.u});
        break;
    }
  }
  return Digraph(graph.num_vertices(), arcs);
}

int MixedGraph::num_undirected() const {
  return static_cast<int>(std::count(state.begin(), state.end(), EdgeState::Undirected));
}

WeightedTree::WeightedTree(std::vector<Weight> weights, std::vector<Edge> edges)
    : weights_(std::move(weights)), edges_(std::move(edges)), adj_(weights_.size()) {
  const int b = size();
  if (b == 0) throw std::invalid_argument("weighted tree needs at least one vertex");
  if (static_cast<int>(edges_.size()) != b - 1) throw std::invalid_argument("tree on b vertices needs b-1 edges");
  for (Weight w : weights_) {
    if (w < 1) throw std::invalid_argument("tree weights must be positive");
    if (total_ > std::numeric_limits<Weight>::max() - w) throw std::invalid_argument("total tree weight overflows");
    total_ += w;
  }
  for (int e = 0; e < b - 1; ++e) {
    const auto [u, v] = edges_[e];
    if (u < 0 || v < 0 || u >= b || v >= b || u == v) throw std::invalid_argument("bad tree edge");
    adj_[u].push_back({v, e});
    adj_[v].push_back({u, e});
  }
  // b-1 edges plus connectivity implies acyclic.
  std::vector<char> seen(b, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& [w, e] : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != b) throw std::invalid_argument("tree edges do not connect all vertices");
}

}  // namespace orient
