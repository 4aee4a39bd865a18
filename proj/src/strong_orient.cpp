#include "orient/strong_orient.hpp"

#include <algorithm>

#include "orient/bridges.hpp"
#include "orient/reachability.hpp"

namespace orient {
namespace {

std::string describe(Edge e) { return std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1); }

}  // namespace

std::vector<std::uint8_t> orient_components_strongly(const Graph& g, const std::vector<char>& is_bridge) {
  const int n = g.num_vertices();
  std::vector<std::uint8_t> forward(g.num_edges(), 1);
  std::vector<char> done(g.num_edges(), 0), seen(n, 0);
  std::vector<int> cursor(n, 0), call;
  for (int root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    call.push_back(root);
    while (!call.empty()) {
      const int v = call.back();
      const auto inc = g.incident(v);
      if (cursor[v] == static_cast<int>(inc.size())) {
        call.pop_back();
        continue;
      }
      const auto [w, e] = inc[cursor[v]++];
      if (is_bridge[e] || done[e]) continue;
      done[e] = 1;
      // Tree edge away from v, or back edge from descendant v to ancestor w:
      // either way the arc is v -> w.
      forward[e] = g.edge(e).u == v ? 1 : 0;
      if (!seen[w]) {
        seen[w] = 1;
        call.push_back(w);
      }
    }
  }
  return forward;
}

Orientation strong_orientation(const Graph& g) {
  const auto bridges = find_bridges(g);
  if (!bridges.empty())
    throw InfeasibleError("graph has bridge " + describe(g.edge(bridges.front())), g.edge(bridges.front()));
  return Orientation(g, orient_components_strongly(g, std::vector<char>(g.num_edges(), 0)));
}

std::optional<OneWayCutWitness> find_one_way_cut(const MixedGraph& m) {
  const int n = m.graph.num_vertices();
  const auto scc = strongly_connected_components(m.to_traversal_digraph());
  if (scc.count <= 1) return std::nullopt;

  // A component with no entering arc is a source of the condensation; no
  // undirected edge can leave it, so its boundary is a one-way cut.
  std::vector<char> entered(scc.count, 0);
  for (int e = 0; e < m.graph.num_edges(); ++e) {
    const auto [u, v] = m.graph.edge(e);
    const int cu = scc.component_of[u], cv = scc.component_of[v];
    if (cu == cv) continue;
    if (m.state[e] != EdgeState::Backward) entered[cv] = 1;
    if (m.state[e] != EdgeState::Forward) entered[cu] = 1;
  }
  for (int v = 0; v < n; ++v) {
    const int c = scc.component_of[v];
    if (entered[c]) continue;
    OneWayCutWitness w;
    for (int x = 0; x < n; ++x)
      if (scc.component_of[x] == c) w.side.push_back(x);
    w.direction = CutDirection::OutOfSide;
    return w;
  }
  return std::nullopt;  // unreachable: a condensation always has a source
}

bool verify_one_way_cut(const MixedGraph& m, const OneWayCutWitness& w) {
  const int n = m.graph.num_vertices();
  if (w.side.empty() || static_cast<int>(w.side.size()) >= n) return false;
  std::vector<char> in(n, 0);
  for (int v : w.side) {
    if (v < 0 || v >= n || in[v]) return false;
    in[v] = 1;
  }
  for (int e = 0; e < m.graph.num_edges(); ++e) {
    const auto [u, v] = m.graph.edge(e);
    if (in[u] == in[v]) continue;
    if (m.state[e] == EdgeState::Undirected) return false;
    const int tail = m.state[e] == EdgeState::Forward ? u : v;
    const bool leaves = in[tail] != 0;
    if (leaves != (w.direction == CutDirection::OutOfSide)) return false;
  }
  return true;
}

bool can_complete_strong(const MixedGraph& m) {
  if (!m.graph.is_connected()) return false;
  if (!find_bridges(m.graph).empty()) return false;
  return !find_one_way_cut(m).has_value();
}

Orientation complete_strong(const MixedGraph& m) {
  if (!m.graph.is_connected()) throw InfeasibleError("graph is disconnected");
  const auto bridges = find_bridges(m.graph);
  if (!bridges.empty())
    throw InfeasibleError("graph has bridge " + describe(m.graph.edge(bridges.front())),
                          m.graph.edge(bridges.front()));
  if (auto cut = find_one_way_cut(m)) throw InfeasibleError("partial orientation has a one-way cut", *cut);

  MixedGraph work = m;
  for (int e = 0; e < work.graph.num_edges(); ++e) {
    if (work.state[e] != EdgeState::Undirected) continue;
    work.state[e] = EdgeState::Forward;
    if (is_strongly_connected(work.to_traversal_digraph())) continue;
    work.state[e] = EdgeState::Backward;
    if (is_strongly_connected(work.to_traversal_digraph())) continue;
    throw std::logic_error("strong completion lost feasibility at edge " + describe(work.graph.edge(e)));
  }
  std::vector<std::uint8_t> forward(work.graph.num_edges());
  for (int e = 0; e < work.graph.num_edges(); ++e) forward[e] = work.state[e] == EdgeState::Forward ? 1 : 0;
  return Orientation(work.graph, std::move(forward));
}

}  // namespace orient
