#include <doctest.h>

#include "orient/generate.hpp"
#include "orient/io.hpp"

using namespace orient;

namespace {

ParseError::Kind parse_kind(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error");
  return ParseError::Kind::Malformed;
}

int parse_line(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("parse_graph reads a triangle") {
  const Graph g = parse_graph("p graph 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("parse_graph skips comments and blank lines") {
  const Graph g = parse_graph("c hello\n\np graph 2 1\nc between\ne 2 1\n");
  CHECK(g.num_edges() == 1);
  CHECK(g.edge(0) == Edge{1, 0});
}

TEST_CASE("parse_graph error kinds carry line numbers") {
  using K = ParseError::Kind;
  CHECK(parse_kind("p graph 2 1\ne 1 1\n") == K::SelfLoop);
  CHECK(parse_kind("p graph 3 2\ne 1 2\ne 2 1\n") == K::DuplicateEdge);
  CHECK(parse_kind("p graph 3 1\ne 1 4\n") == K::OutOfRange);
  CHECK(parse_kind("p graph 3 1\ne 1 x\n") == K::Malformed);
  CHECK(parse_kind("p graph 3 1\nq 1 2\n") == K::Malformed);
  CHECK(parse_kind("e 1 2\n") == K::Malformed);
  CHECK(parse_kind("p graph 3 2\ne 1 2\n") == K::CountMismatch);
  CHECK(parse_line("p graph 3 2\ne 1 2\n\ne 2 2\n") == 4);
}

TEST_CASE("parse_mixed reads arcs as forward edges") {
  const MixedGraph m = parse_mixed("p mixed 3 2\na 1 2\ne 2 3\n");
  CHECK(m.graph.edge(0) == Edge{0, 1});
  CHECK(m.state[0] == EdgeState::Forward);
  CHECK(m.state[1] == EdgeState::Undirected);
}

TEST_CASE("orientation output reads back through the mixed parser") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  const Orientation o(g, {1, 0});
  const std::string text = serialize_orientation(o, "R", "2");
  CHECK(text == "p mixed 3 2\na 1 2\na 3 2\nR 2\n");
  const Orientation back = parse_orientation(text);
  CHECK(back.arcs() == std::vector<Edge>{{0, 1}, {2, 1}});
  CHECK_THROWS_AS(parse_orientation("p mixed 2 1\ne 1 2\n"), ParseError);
}

TEST_CASE("serialize then parse is the normal form") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_connected_graph(12, 10, rng);
    const std::string once = serialize_graph(g);
    CHECK(serialize_graph(parse_graph(once)) == once);

    MixedGraph m(g);
    for (auto& s : m.state) s = static_cast<EdgeState>(rng() % 3);
    const std::string mixed = serialize_mixed(m);
    CHECK(serialize_mixed(parse_mixed(mixed)) == mixed);

    const WeightedTree t = random_weighted_tree(9, 50, rng);
    const std::string wt = serialize_wtree(t);
    const WeightedTree back = parse_wtree(wt);
    CHECK(back.weights() == t.weights());
    CHECK(serialize_wtree(back) == wt);
  }
}

TEST_CASE("parse_wtree rejects non-trees and missing weights") {
  CHECK_THROWS_AS(parse_wtree("p wtree 3\nv 1 1\nv 2 1\nv 3 1\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_wtree("p wtree 2\nv 1 1\ne 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_wtree("p wtree 2\nv 1 0\nv 2 1\ne 1 2\n"), ParseError);
  const WeightedTree t = parse_wtree("p wtree 2\nv 1 2\nv 2 3\ne 1 2\n");
  CHECK(t.total_weight() == 5);
}
