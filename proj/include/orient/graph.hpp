#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "orient/core.hpp"

namespace orient {

/// A vertex pair. For undirected edges the order is the one given at
/// construction; an orientation's "forward" direction is u -> v.
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  int neighbor;
  int edge;
};

/// Simple undirected graph on vertices 0..n-1. Self-loops and parallel edges
/// are rejected with std::invalid_argument.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int add_edge(int u, int v);

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int e) const { return edges_.at(e); }
  std::span<const Incidence> incident(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  std::optional<int> edge_index(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_index(u, v).has_value(); }

  bool is_connected() const;

 private:
  static std::uint64_t key(int u, int v);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
  std::unordered_map<std::uint64_t, int> index_;
};

/// Directed graph stored as compressed out-adjacency. Parallel arcs are
/// tolerated; reachability is unaffected by them.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int n, std::span<const Edge> arcs);

  int num_vertices() const noexcept { return n_; }
  int num_arcs() const noexcept { return static_cast<int>(arcs_.size()); }
  const std::vector<Edge>& arcs() const noexcept { return arcs_; }
  std::span<const int> successors(int v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

 private:
  int n_ = 0;
  std::vector<Edge> arcs_;
  std::vector<int> offsets_;
  std::vector<int> targets_;
};

/// A full direction assignment for the edges of a graph.
class Orientation {
 public:
  Orientation() = default;
  /// All edges directed u -> v as stored.
  explicit Orientation(Graph graph);
  Orientation(Graph graph, std::vector<std::uint8_t> forward);

  const Graph& graph() const noexcept { return graph_; }
  bool forward(int e) const { return forward_.at(e) != 0; }
  void set_forward(int e, bool value) { forward_.at(e) = value ? 1 : 0; }
  const std::vector<std::uint8_t>& directions() const noexcept { return forward_; }

  int tail(int e) const { return forward(e) ? graph_.edge(e).u : graph_.edge(e).v; }
  int head(int e) const { return forward(e) ? graph_.edge(e).v : graph_.edge(e).u; }
  Edge arc(int e) const { return {tail(e), head(e)}; }
  std::vector<Edge> arcs() const;
  Digraph to_digraph() const;

 private:
  Graph graph_;
  std::vector<std::uint8_t> forward_;
};

enum class EdgeState : std::uint8_t { Undirected, Forward, Backward };

/// Partially oriented graph.
struct MixedGraph {
  Graph graph;
  std::vector<EdgeState> state;

  MixedGraph() = default;
  explicit MixedGraph(Graph g);
  MixedGraph(Graph g, std::vector<EdgeState> s);

  /// Undirected edges become two opposing arcs.
  Digraph to_traversal_digraph() const;
  int num_undirected() const;
};

/// Tree with positive integer vertex weights. Construction validates that the
/// edges form a spanning tree and every weight is at least 1.
class WeightedTree {
 public:
  WeightedTree() = default;
  WeightedTree(std::vector<Weight> weights, std::vector<Edge> edges);

  int size() const noexcept { return static_cast<int>(weights_.size()); }
  Weight weight(int v) const { return weights_.at(v); }
  const std::vector<Weight>& weights() const noexcept { return weights_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Incidence> incident(int v) const { return adj_.at(v); }
  Weight total_weight() const noexcept { return total_; }

 private:
  std::vector<Weight> weights_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
  Weight total_ = 0;
};

enum class CutDirection : std::uint8_t { OutOfSide, IntoSide };

/// Side X of an edge cut whose edges are all oriented the same way.
struct OneWayCutWitness {
  std::vector<int> side;
  CutDirection direction = CutDirection::OutOfSide;
};

/// Raised when an instance admits no solution of the requested kind:
/// disconnected input, a bridge where none is allowed, or a one-way cut.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
  InfeasibleError(const std::string& what, Edge bridge)
      : std::runtime_error(what), bridge_(bridge) {}
  InfeasibleError(const std::string& what, OneWayCutWitness cut)
      : std::runtime_error(what), cut_(std::move(cut)) {}

  const std::optional<Edge>& bridge() const noexcept { return bridge_; }
  const std::optional<OneWayCutWitness>& cut() const noexcept { return cut_; }

 private:
  std::optional<Edge> bridge_;
  std::optional<OneWayCutWitness> cut_;
};

}  // namespace orient
