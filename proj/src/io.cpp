#include "orient/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace orient {
namespace {

using Kind = ParseError::Kind;

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.tokens.empty() && line.tokens.front() != "c") lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

long long to_integer(std::string_view token, int line) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(Kind::Malformed, line, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

int to_vertex(std::string_view token, int n, int line) {
  const long long v = to_integer(token, line);
  if (v < 1 || v > n)
    throw ParseError(Kind::OutOfRange, line, "vertex " + std::string(token) + " outside 1.." + std::to_string(n));
  return static_cast<int>(v - 1);
}

void expect_arity(const Line& l, std::size_t count) {
  if (l.tokens.size() != count)
    throw ParseError(Kind::Malformed, l.number,
                     "expected " + std::to_string(count) + " fields, got " + std::to_string(l.tokens.size()));
}

void add_checked(Graph& g, int u, int v, int line) {
  if (u == v) throw ParseError(Kind::SelfLoop, line, "self-loop at vertex " + std::to_string(u + 1));
  if (g.has_edge(u, v))
    throw ParseError(Kind::DuplicateEdge, line,
                     "duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
  g.add_edge(u, v);
}

// Reads the `p <kind> <n> [<m>]` header; returns the count fields.
std::vector<long long> read_header(const std::vector<Line>& lines, std::initializer_list<std::string_view> kinds,
                                   std::size_t fields) {
  if (lines.empty()) throw ParseError(Kind::Malformed, 1, "missing header line");
  const Line& h = lines.front();
  if (h.tokens[0] != "p" || h.tokens.size() < 2 ||
      std::find(kinds.begin(), kinds.end(), h.tokens[1]) == kinds.end())
    throw ParseError(Kind::Malformed, h.number, "expected header 'p " + std::string(*kinds.begin()) + " ...'");
  expect_arity(h, 2 + fields);
  std::vector<long long> values;
  for (std::size_t i = 0; i < fields; ++i) {
    values.push_back(to_integer(h.tokens[2 + i], h.number));
    if (values.back() < 0) throw ParseError(Kind::Malformed, h.number, "negative count in header");
  }
  return values;
}

std::vector<Edge> sorted_normalized(const std::vector<Edge>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) out.push_back({std::min(u, v), std::max(u, v)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  const auto header = read_header(lines, {"graph"}, 2);
  const int n = static_cast<int>(header[0]);
  Graph g(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] != "e") throw ParseError(Kind::Malformed, l.number, "unknown line type '" + std::string(l.tokens[0]) + "'");
    expect_arity(l, 3);
    add_checked(g, to_vertex(l.tokens[1], n, l.number), to_vertex(l.tokens[2], n, l.number), l.number);
  }
  if (g.num_edges() != header[1])
    throw ParseError(Kind::CountMismatch, lines.back().number,
                     "header announces " + std::to_string(header[1]) + " edges, found " + std::to_string(g.num_edges()));
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << "p graph " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : sorted_normalized(g.edges())) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

MixedGraph parse_mixed(std::string_view text) {
  const auto lines = tokenize(text);
  const auto header = read_header(lines, {"mixed", "graph"}, 2);
  const int n = static_cast<int>(header[0]);
  Graph g(n);
  std::vector<EdgeState> state;
  bool summary_seen = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    const auto type = l.tokens[0];
    if (type == "R" || type == "mu") {
      expect_arity(l, 2);
      summary_seen = true;
      continue;
    }
    if (summary_seen) throw ParseError(Kind::Malformed, l.number, "edge line after summary line");
    if (type != "e" && type != "a")
      throw ParseError(Kind::Malformed, l.number, "unknown line type '" + std::string(type) + "'");
    expect_arity(l, 3);
    add_checked(g, to_vertex(l.tokens[1], n, l.number), to_vertex(l.tokens[2], n, l.number), l.number);
    state.push_back(type == "a" ? EdgeState::Forward : EdgeState::Undirected);
  }
  if (g.num_edges() != header[1])
    throw ParseError(Kind::CountMismatch, lines.back().number,
                     "header announces " + std::to_string(header[1]) + " edges, found " + std::to_string(g.num_edges()));
  return MixedGraph(std::move(g), std::move(state));
}

std::string serialize_mixed(const MixedGraph& m) {
  struct Row {
    Edge key;
    char type;
    Edge printed;
  };
  std::vector<Row> rows;
  for (int e = 0; e < m.graph.num_edges(); ++e) {
    const auto [u, v] = m.graph.edge(e);
    const Edge key{std::min(u, v), std::max(u, v)};
    switch (m.state[e]) {
      case EdgeState::Undirected: rows.push_back({key, 'e', key}); break;
      case EdgeState::Forward: rows.push_back({key, 'a', {u, v}}); break;
      case EdgeState::Backward: rows.push_back({key, 'a', {v, u}}); break;
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.key < b.key; });
  std::ostringstream os;
  os << "p mixed " << m.graph.num_vertices() << ' ' << m.graph.num_edges() << '\n';
  for (const Row& r : rows) os << r.type << ' ' << r.printed.u + 1 << ' ' << r.printed.v + 1 << '\n';
  return os.str();
}

WeightedTree parse_wtree(std::string_view text) {
  const auto lines = tokenize(text);
  const auto header = read_header(lines, {"wtree"}, 1);
  const int b = static_cast<int>(header[0]);
  if (b < 1) throw ParseError(Kind::Malformed, lines.front().number, "tree needs at least one vertex");
  std::vector<Weight> weights(b, 0);
  std::vector<Edge> edges;
  Graph check(b);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    expect_arity(l, 3);
    if (l.tokens[0] == "v") {
      const int v = to_vertex(l.tokens[1], b, l.number);
      const long long w = to_integer(l.tokens[2], l.number);
      if (w < 1) throw ParseError(Kind::OutOfRange, l.number, "vertex weights must be positive");
      if (weights[v] != 0) throw ParseError(Kind::Malformed, l.number, "weight given twice for vertex " + std::to_string(v + 1));
      weights[v] = w;
    } else if (l.tokens[0] == "e") {
      const int u = to_vertex(l.tokens[1], b, l.number), v = to_vertex(l.tokens[2], b, l.number);
      add_checked(check, u, v, l.number);
      edges.push_back({u, v});
    } else {
      throw ParseError(Kind::Malformed, l.number, "unknown line type '" + std::string(l.tokens[0]) + "'");
    }
  }
  const int last = lines.back().number;
  for (int v = 0; v < b; ++v)
    if (weights[v] == 0) throw ParseError(Kind::CountMismatch, last, "no weight for vertex " + std::to_string(v + 1));
  try {
    return WeightedTree(std::move(weights), std::move(edges));
  } catch (const std::invalid_argument& err) {
    throw ParseError(Kind::Malformed, last, err.what());
  }
}

std::string serialize_wtree(const WeightedTree& t) {
  std::ostringstream os;
  os << "p wtree " << t.size() << '\n';
  for (int v = 0; v < t.size(); ++v) os << "v " << v + 1 << ' ' << t.weight(v) << '\n';
  for (auto [u, v] : sorted_normalized(t.edges())) os << "e " << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

std::string serialize_orientation(const Orientation& o, std::string_view summary_key,
                                  std::string_view summary_value) {
  auto arcs = o.arcs();
  std::sort(arcs.begin(), arcs.end());
  std::ostringstream os;
  os << "p mixed " << o.graph().num_vertices() << ' ' << o.graph().num_edges() << '\n';
  for (auto [u, v] : arcs) os << "a " << u + 1 << ' ' << v + 1 << '\n';
  if (!summary_key.empty()) os << summary_key << ' ' << summary_value << '\n';
  return os.str();
}

Orientation parse_orientation(std::string_view text) {
  MixedGraph m = parse_mixed(text);
  for (int e = 0; e < m.graph.num_edges(); ++e) {
    if (m.state[e] == EdgeState::Undirected) {
      const auto [u, v] = m.graph.edge(e);
      throw ParseError(Kind::Malformed, 0,
                       "edge " + std::to_string(u + 1) + " " + std::to_string(v + 1) + " is not oriented");
    }
  }
  return Orientation(std::move(m.graph));
}

std::string to_dot(const Orientation& o) {
  auto arcs = o.arcs();
  std::sort(arcs.begin(), arcs.end());
  std::ostringstream os;
  os << "digraph G {\n";
  for (int v = 0; v < o.graph().num_vertices(); ++v) os << "  " << v + 1 << ";\n";
  for (auto [u, v] : arcs) os << "  " << u + 1 << " -> " << v + 1 << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace orient
