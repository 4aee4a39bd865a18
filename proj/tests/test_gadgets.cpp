#include <doctest.h>

#include "orient/gadgets.hpp"
#include "orient/generate.hpp"
#include "orient/reachability.hpp"
#include "orient/wto.hpp"
#include "support/oracles.hpp"

using namespace orient;

namespace {

// (x or y or not z), variables x, y, z = 0, 1, 2.
Nae3SatInstance xy_not_z() {
  Nae3SatInstance inst;
  inst.num_vars = 3;
  inst.clauses.push_back({Literal{0, false}, Literal{1, false}, Literal{2, true}});
  return inst;
}

std::vector<bool> assignment_of(std::uint32_t mask, int vars) {
  std::vector<bool> a(vars);
  for (int i = 0; i < vars; ++i) a[i] = (mask >> i) & 1U;
  return a;
}

}  // namespace

TEST_CASE("partition_to_wto examples") {
  const std::vector<Weight> ones{1, 1};
  auto g = partition_to_wto(ones);
  CHECK(g.tree.weight(0) == 2);
  CHECK(g.tree.size() == 3);
  CHECK(g.threshold == 5);

  const std::vector<Weight> odd_split{3, 3, 2};
  g = partition_to_wto(odd_split);
  CHECK(g.threshold == 80);
  CHECK(brute_force_tree_orientation(g.tree).mu == 79);

  const std::vector<Weight> fours{2, 2, 2, 2};
  g = partition_to_wto(fours);
  CHECK(g.threshold == 80);
  CHECK(brute_force_tree_orientation(g.tree).mu == 80);

  const std::vector<Weight> odd{1, 2};
  g = partition_to_wto(odd);
  CHECK(g.odd_sum);

  CHECK_THROWS_AS(partition_to_wto(std::vector<Weight>{}), std::invalid_argument);
}

TEST_CASE("nae3sat_to_graph sizes") {
  auto gadget = nae3sat_to_graph(xy_not_z());
  CHECK(gadget.graph.num_vertices() == 21);
  CHECK(gadget.graph.num_edges() == 24);

  Nae3SatInstance empty;
  empty.num_vars = 1;
  gadget = nae3sat_to_graph(empty);
  CHECK(gadget.graph.num_vertices() == 2);
  CHECK(gadget.graph.num_edges() == 1);

  auto twice = xy_not_z();
  twice.clauses.push_back(twice.clauses[0]);
  CHECK(nae3sat_to_graph(twice).graph.num_edges() == 45);
}

TEST_CASE("gadget annotations describe the construction") {
  const auto gadget = nae3sat_to_graph(xy_not_z());
  const auto& g = gadget.graph;
  const auto& clause = gadget.annotations.clauses.at(0);
  for (int i = 0; i < 9; ++i) {
    const Edge e = g.edge(clause.cycle_edges[i]);
    const Edge want{clause.cycle[i], clause.cycle[(i + 1) % 9]};
    CHECK(((e == want) || (e == Edge{want.v, want.u})));
  }
  CHECK(clause.darkened == std::array<int, 3>{clause.cycle[2], clause.cycle[5], clause.cycle[8]});
  for (int j = 0; j < 3; ++j) {
    const auto& lit = clause.literals[j];
    CHECK(lit.true_end == clause.cycle[3 * j]);
    CHECK(lit.false_end == clause.cycle[3 * j + 1]);
    const auto& var = gadget.annotations.variables[lit.literal.var];
    const auto& from_t = clause.connectors[2 * j];
    const auto& from_f = clause.connectors[2 * j + 1];
    CHECK(from_t.cycle_vertex == lit.true_end);
    CHECK(from_f.cycle_vertex == lit.false_end);
    CHECK(from_t.variable_vertex == (lit.literal.negated ? var.true_vertex : var.false_vertex));
    CHECK(from_f.variable_vertex == (lit.literal.negated ? var.false_vertex : var.true_vertex));
    CHECK(g.has_edge(from_t.cycle_vertex, from_t.midpoint));
    CHECK(g.has_edge(from_t.midpoint, from_t.variable_vertex));
  }
}

TEST_CASE("nae_count examples") {
  CHECK(nae_count(xy_not_z(), {true, false, true}) == 1);
  Nae3SatInstance xxx;
  xxx.num_vars = 1;
  xxx.clauses.push_back({Literal{0, false}, Literal{0, false}, Literal{0, false}});
  CHECK(nae_count(xxx, {true}) == 0);
  CHECK(nae_count(xxx, {false}) == 0);
  Nae3SatInstance xyz;
  xyz.num_vars = 3;
  xyz.clauses.push_back({Literal{0, false}, Literal{1, false}, Literal{2, false}});
  CHECK(nae_count(xyz, {true, true, false}) == 1);
}

TEST_CASE("assignment_to_orientation examples") {
  const auto gadget = nae3sat_to_graph(xy_not_z());
  CHECK(count_reachability(assignment_to_orientation(gadget, {true, false, true})).r == 25);
  CHECK(count_reachability(assignment_to_orientation(gadget, {true, true, false})).r == 27);
  CHECK_THROWS_AS(assignment_to_orientation(gadget, {true}), std::invalid_argument);
}

TEST_CASE("every orientation of a 9-cycle has a directed 2-path") {
  const Graph c9 = testing::cycle_graph(9);
  int with_path = 0;
  testing::for_each_orientation(c9, [&](const std::vector<Edge>& arcs) {
    if (testing::pairwise_reachability(9, arcs) > 9) ++with_path;
  });
  CHECK(with_path == 512);
}

TEST_CASE("R of an assignment orientation is |E| + 3m - 2 nae_count") {
  Rng rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    const int vars = 1 + static_cast<int>(rng() % 4);
    const int m = static_cast<int>(rng() % 4);
    const auto inst = random_nae3sat(vars, m, rng);
    const auto gadget = nae3sat_to_graph(inst);
    const auto edges = static_cast<std::uint64_t>(gadget.graph.num_edges());
    for (std::uint32_t mask = 0; mask < (1U << vars); ++mask) {
      const auto a = assignment_of(mask, vars);
      const Orientation o = assignment_to_orientation(gadget, a);
      const auto r = count_reachability(o).r;
      CHECK(r == edges + 3U * m - 2U * static_cast<std::uint64_t>(nae_count(inst, a)));
      const auto back = orientation_to_assignment(gadget, o);
      CHECK(back.assignment == a);
      CHECK(back.r == r);
    }
  }
}

TEST_CASE("random orientations of a one-clause gadget meet the assignment bound") {
  const auto inst = xy_not_z();
  const auto gadget = nae3sat_to_graph(inst);
  Rng rng(52);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::uint8_t> fwd(gadget.graph.num_edges());
    for (auto& f : fwd) f = static_cast<std::uint8_t>(rng() & 1U);
    const Orientation o(gadget.graph, fwd);
    const auto reading = orientation_to_assignment(gadget, o);
    CHECK(nae_count(inst, reading.assignment) >= reading.guaranteed);
  }
}

TEST_CASE("DIMACS cnf parsing") {
  const auto inst = parse_dimacs_cnf("c comment\np cnf 3 2\n1 2 -3 0\n-1 0\n");
  CHECK(inst.num_vars == 3);
  REQUIRE(inst.clauses.size() == 2);
  CHECK(inst.clauses[0][2] == Literal{2, true});
  CHECK(inst.clauses[1][0] == Literal{0, true});
  CHECK(inst.clauses[1][2] == Literal{0, true});
  CHECK(parse_dimacs_cnf(serialize_dimacs_cnf(inst)).clauses == inst.clauses);
  CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 4 1\n1 2 3 4 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 1\n1 3 0\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs_cnf("p cnf 2 2\n1 2 0\n"), ParseError);
}
