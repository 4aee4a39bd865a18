#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "orient/bridges.hpp"
#include "orient/generate.hpp"
#include "orient/io.hpp"
#include "orient/reachability.hpp"
#include "support/oracles.hpp"

using namespace orient;
using orient::testing::pairwise_reachability;

namespace {

Digraph digraph(int n, std::vector<Edge> arcs) { return Digraph(n, arcs); }

Graph triangle_with_pendant() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(2, 3);
  return g;
}

}  // namespace

TEST_CASE("count_reachability on small digraphs") {
  CHECK(count_reachability(digraph(3, {{0, 1}, {1, 2}, {2, 0}})).r == 6);
  CHECK(count_reachability(digraph(2, {{0, 1}})).r == 1);
  const auto path = count_reachability(digraph(3, {{0, 1}, {1, 2}}), true);
  CHECK(path.r == 3);
  REQUIRE(path.pairs.has_value());
  CHECK(*path.pairs == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  CHECK(count_reachability(digraph(1, {})).r == 0);
}

TEST_CASE("strong connectivity and acyclicity") {
  const auto cycle = digraph(3, {{0, 1}, {1, 2}, {2, 0}});
  CHECK(is_strongly_connected(cycle));
  CHECK_FALSE(is_acyclic(cycle));
  const auto path = digraph(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(is_strongly_connected(path));
  CHECK(is_acyclic(path));
  const auto single = digraph(1, {});
  CHECK(is_strongly_connected(single));
  CHECK(is_acyclic(single));
}

TEST_CASE("count_reachability agrees with per-source DFS on random digraphs") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 14)(rng);
    const int m = std::uniform_int_distribution<int>(0, 3 * n)(rng);
    std::vector<Edge> arcs;
    for (int i = 0; i < m; ++i) {
      const int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
      const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
      if (u != v) arcs.push_back({u, v});
    }
    const Digraph d(n, arcs);
    const auto report = count_reachability(d, true);
    CHECK(report.r == pairwise_reachability(n, arcs));
    CHECK(report.pairs->size() == report.r);
  }
}

TEST_CASE("reachability of any orientation lies between m and n(n-1)") {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_connected_graph(9, 6, rng);
    std::vector<std::uint8_t> fwd(g.num_edges());
    for (auto& f : fwd) f = static_cast<std::uint8_t>(rng() & 1U);
    const auto r = count_reachability(Orientation(g, fwd)).r;
    CHECK(r >= static_cast<std::uint64_t>(g.num_edges()));
    CHECK(r <= 9U * 8U);
  }
}

TEST_CASE("find_bridges examples") {
  const Graph tp = triangle_with_pendant();
  CHECK(find_bridges(tp) == std::vector<int>{3});
  Graph path(4);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  CHECK(find_bridges(path) == std::vector<int>{0, 1, 2});
  CHECK(find_bridges(testing::cycle_graph(4)).empty());
  Graph split(4);
  split.add_edge(0, 1);
  split.add_edge(2, 3);
  CHECK_THROWS_AS(find_bridges(split), InfeasibleError);
}

TEST_CASE("find_bridges matches edge deletion on small random graphs") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 9)(rng);
    const int extra = std::uniform_int_distribution<int>(0, 12 - std::max(0, n - 1))(rng);
    const Graph g = random_connected_graph(n, extra, rng);
    REQUIRE(g.num_edges() <= 12);
    CHECK(find_bridges(g) == testing::bridges_by_deletion(g));
  }
}

TEST_CASE("condense examples") {
  const auto tp = condense(triangle_with_pendant());
  CHECK(tp.tree.size() == 2);
  CHECK(tp.tree.weights() == std::vector<Weight>{3, 1});
  CHECK(tp.map.bridge_of_tree_edge == std::vector<int>{3});

  const auto k4 = condense(testing::complete_graph(4));
  CHECK(k4.tree.size() == 1);
  CHECK(k4.tree.weight(0) == 4);
  CHECK(k4.tree.edges().empty());

  Graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  const auto path = condense(p4);
  CHECK(path.tree.size() == 4);
  CHECK(path.tree.weights() == std::vector<Weight>{1, 1, 1, 1});
  CHECK(path.tree.edges().size() == 3);
}

TEST_CASE("condense invariants on random graphs") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph_with_bridges(40, 8, rng);
    const auto c = condense(g);
    CHECK(c.tree.total_weight() == g.num_vertices());
    CHECK(c.tree.edges().size() == find_bridges(g).size());
    std::vector<int> all;
    for (int t = 0; t < c.tree.size(); ++t) {
      CHECK(c.tree.weight(t) == static_cast<Weight>(c.map.members_of[t].size()));
      for (int v : c.map.members_of[t]) {
        CHECK(c.map.component_of[v] == t);
        all.push_back(v);
      }
    }
    std::sort(all.begin(), all.end());
    std::vector<int> expected(g.num_vertices());
    std::iota(expected.begin(), expected.end(), 0);
    CHECK(all == expected);
    for (std::size_t te = 0; te < c.tree.edges().size(); ++te) {
      const Edge& b = g.edge(c.map.bridge_of_tree_edge[te]);
      CHECK(c.tree.edges()[te] == Edge{c.map.component_of[b.u], c.map.component_of[b.v]});
    }
  }
}

TEST_CASE("Graph rejects self-loops, duplicates and bad endpoints") {
  Graph g(3);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
}

TEST_CASE("WeightedTree validation") {
  CHECK_THROWS_AS(WeightedTree({1, 1, 1}, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedTree({1, 0}, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedTree({1, 1, 1}, {{0, 1}}), std::invalid_argument);
  CHECK_NOTHROW(WeightedTree({5}, {}));
}
