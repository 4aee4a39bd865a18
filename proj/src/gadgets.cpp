#include "orient/gadgets.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "orient/reachability.hpp"

namespace orient {

WtoGadget partition_to_wto(std::span<const Weight> a) {
  if (a.empty()) throw std::invalid_argument("PARTITION instance needs at least one number");
  WtoGadget out;
  std::vector<Weight> weights{0};
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 1) throw std::invalid_argument("PARTITION numbers must be positive");
    out.total += a[i];
    weights.push_back(a[i]);
    edges.push_back({0, static_cast<int>(i) + 1});
  }
  weights[0] = out.total;
  out.tree = WeightedTree(std::move(weights), std::move(edges));
  const Wide s = static_cast<Wide>(out.total);
  out.odd_sum = out.total % 2 != 0;
  out.threshold = out.odd_sum ? (5 * s * s + 3) / 4 : 5 * (s / 2) * (s / 2);
  return out;
}

Nae3SatInstance parse_dimacs_cnf(std::string_view text) {
  using Kind = ParseError::Kind;
  Nae3SatInstance inst;
  long long declared_clauses = -1;
  std::vector<Literal> current;
  int line_no = 0, last_line = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tok;
    if (!(fields >> tok)) continue;
    last_line = line_no;
    if (tok == "c" || tok == "%") continue;
    if (tok == "p") {
      std::string kind;
      long long vars = -1, clauses = -1;
      std::string extra;
      if (declared_clauses != -1 || !(fields >> kind >> vars >> clauses) || kind != "cnf" || vars < 0 ||
          clauses < 0 || (fields >> extra))
        throw ParseError(Kind::Malformed, line_no, "expected header 'p cnf <vars> <clauses>'");
      inst.num_vars = static_cast<int>(vars);
      declared_clauses = clauses;
      continue;
    }
    if (declared_clauses == -1) throw ParseError(Kind::Malformed, line_no, "clause before 'p cnf' header");
    do {
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(Kind::Malformed, line_no, "expected a literal, got '" + tok + "'");
      if (value == 0) {
        if (current.empty()) throw ParseError(Kind::Malformed, line_no, "empty clause");
        if (current.size() > 3) throw ParseError(Kind::Malformed, line_no, "clause has more than three literals");
        while (current.size() < 3) current.push_back(current.back());
        inst.clauses.push_back({current[0], current[1], current[2]});
        current.clear();
        continue;
      }
      const long long var = value < 0 ? -value : value;
      if (var > inst.num_vars)
        throw ParseError(Kind::OutOfRange, line_no, "variable " + std::to_string(var) + " exceeds declared count");
      current.push_back({static_cast<int>(var - 1), value < 0});
    } while (fields >> tok);
  }
  if (declared_clauses == -1) throw ParseError(Kind::Malformed, std::max(1, line_no), "missing 'p cnf' header");
  if (!current.empty()) throw ParseError(Kind::Malformed, last_line, "last clause is not terminated by 0");
  if (static_cast<long long>(inst.clauses.size()) != declared_clauses)
    throw ParseError(Kind::CountMismatch, last_line,
                     "header announces " + std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(inst.clauses.size()));
  return inst;
}

std::string serialize_dimacs_cnf(const Nae3SatInstance& inst) {
  std::ostringstream os;
  os << "p cnf " << inst.num_vars << ' ' << inst.clauses.size() << '\n';
  for (const Clause& c : inst.clauses) {
    for (const Literal& l : c) os << (l.negated ? -(l.var + 1) : l.var + 1) << ' ';
    os << "0\n";
  }
  return os.str();
}

int nae_count(const Nae3SatInstance& inst, const std::vector<bool>& assignment) {
  if (static_cast<int>(assignment.size()) != inst.num_vars)
    throw std::invalid_argument("assignment must cover every variable");
  int count = 0;
  for (const Clause& c : inst.clauses) {
    bool any_true = false, any_false = false;
    for (const Literal& l : c) (assignment[l.var] != l.negated ? any_true : any_false) = true;
    if (any_true && any_false) ++count;
  }
  return count;
}

NaeGadget nae3sat_to_graph(const Nae3SatInstance& inst) {
  const int vars = inst.num_vars;
  const int m = static_cast<int>(inst.clauses.size());
  for (const Clause& c : inst.clauses)
    for (const Literal& l : c)
      if (l.var < 0 || l.var >= vars) throw std::invalid_argument("literal variable out of range");

  NaeGadget out{Graph(2 * vars + 15 * m), {}};
  Graph& g = out.graph;
  auto& ann = out.annotations;
  for (int x = 0; x < vars; ++x) ann.variables.push_back({g.add_edge(2 * x, 2 * x + 1), 2 * x, 2 * x + 1});

  for (int ci = 0; ci < m; ++ci) {
    const int base = 2 * vars + 15 * ci;
    ClauseGadget cg{};
    for (int i = 0; i < 9; ++i) cg.cycle[i] = base + i;
    for (int i = 0; i < 9; ++i) cg.cycle_edges[i] = g.add_edge(cg.cycle[i], cg.cycle[(i + 1) % 9]);
    for (int j = 0; j < 3; ++j) {
      const Literal lit = inst.clauses[ci][j];
      cg.literals[j] = {lit, cg.cycle_edges[3 * j], cg.cycle[3 * j], cg.cycle[3 * j + 1]};
      cg.darkened[j] = cg.cycle[3 * j + 2];
      const VariableGadget& var = ann.variables[lit.var];
      const int t_target = lit.negated ? var.true_vertex : var.false_vertex;
      const int f_target = lit.negated ? var.false_vertex : var.true_vertex;
      const std::array<std::pair<int, int>, 2> ends{{{cg.literals[j].true_end, t_target},
                                                      {cg.literals[j].false_end, f_target}}};
      for (int k = 0; k < 2; ++k) {
        const int mid = base + 9 + 2 * j + k;
        ConnectorPath& p = cg.connectors[2 * j + k];
        p.cycle_vertex = ends[k].first;
        p.midpoint = mid;
        p.variable_vertex = ends[k].second;
        p.edges = {g.add_edge(p.cycle_vertex, mid), g.add_edge(mid, p.variable_vertex)};
      }
    }
    ann.clauses.push_back(cg);
  }
  return out;
}

Orientation assignment_to_orientation(const NaeGadget& gadget, const std::vector<bool>& assignment) {
  const Graph& g = gadget.graph;
  const auto& ann = gadget.annotations;
  if (assignment.size() != ann.variables.size()) throw std::invalid_argument("assignment must cover every variable");

  std::vector<std::uint8_t> forward(g.num_edges(), 1);
  auto point = [&](int e, int tail) { forward[e] = g.edge(e).u == tail ? 1 : 0; };
  // Both ends of a connector 2-path share a role (source or sink) and the
  // midpoint takes the other; a vertex is a source iff its variable or literal
  // edge leaves it.
  std::vector<char> source(g.num_vertices(), 0);
  for (std::size_t x = 0; x < ann.variables.size(); ++x) {
    const VariableGadget& v = ann.variables[x];
    const int tail = assignment[x] ? v.false_vertex : v.true_vertex;
    point(v.edge, tail);
    source[tail] = 1;
  }

  for (const ClauseGadget& cg : ann.clauses) {
    std::array<bool, 3> value{};
    for (int j = 0; j < 3; ++j) {
      const LiteralGadget& lit = cg.literals[j];
      value[j] = assignment[lit.literal.var] != lit.literal.negated;
      const int tail = value[j] ? lit.true_end : lit.false_end;
      point(lit.edge, tail);
      source[tail] = 1;
    }
    for (const ConnectorPath& p : cg.connectors) {
      if (source[p.cycle_vertex] != source[p.variable_vertex])
        throw std::logic_error("connector 6-cycle cannot alternate");
      if (source[p.cycle_vertex]) {
        point(p.edges[0], p.cycle_vertex);
        point(p.edges[1], p.variable_vertex);
      } else {
        point(p.edges[0], p.midpoint);
        point(p.edges[1], p.midpoint);
      }
    }

    // Local digraph of the clause: its cycle, midpoints and variable edges.
    std::map<int, int> local;
    auto id = [&](int v) { return local.emplace(v, static_cast<int>(local.size())).first->second; };
    std::vector<Edge> fixed;
    auto add_fixed = [&](int e) {
      const Edge ed = g.edge(e);
      const bool fwd = forward[e] != 0;
      fixed.push_back({id(fwd ? ed.u : ed.v), id(fwd ? ed.v : ed.u)});
    };
    for (int j = 0; j < 3; ++j) add_fixed(cg.literals[j].edge);
    for (const ConnectorPath& p : cg.connectors) {
      add_fixed(p.edges[0]);
      add_fixed(p.edges[1]);
    }
    std::vector<int> seen_vars;
    for (const LiteralGadget& lit : cg.literals) {
      if (std::find(seen_vars.begin(), seen_vars.end(), lit.literal.var) != seen_vars.end()) continue;
      seen_vars.push_back(lit.literal.var);
      add_fixed(ann.variables[lit.literal.var].edge);
    }
    static constexpr std::array<int, 6> kFree{1, 2, 4, 5, 7, 8};
    int best_mask = -1;
    std::uint64_t best_extra = 0;
    for (int mask = 0; mask < 64; ++mask) {
      std::vector<Edge> arcs = fixed;
      for (int k = 0; k < 6; ++k) {
        const int i = kFree[k];
        const int a = id(cg.cycle[i]), b = id(cg.cycle[(i + 1) % 9]);
        arcs.push_back(((mask >> k) & 1) ? Edge{b, a} : Edge{a, b});
      }
      const Digraph d(static_cast<int>(local.size()), arcs);
      const std::uint64_t extra = count_reachability(d).r - arcs.size();
      if (best_mask == -1 || extra < best_extra) {
        best_mask = mask;
        best_extra = extra;
      }
    }
    const bool satisfied = !(value[0] == value[1] && value[1] == value[2]);
    if (best_extra != (satisfied ? 1U : 3U))
      throw std::logic_error("clause gadget local minimum is " + std::to_string(best_extra) + ", expected " +
                             (satisfied ? "1" : "3"));
    for (int k = 0; k < 6; ++k) {
      const int i = kFree[k];
      const int a = cg.cycle[i], b = cg.cycle[(i + 1) % 9];
      point(cg.cycle_edges[i], ((best_mask >> k) & 1) ? b : a);
    }
  }
  return Orientation(g, std::move(forward));
}

AssignmentReading orientation_to_assignment(const NaeGadget& gadget, const Orientation& o) {
  const auto& ann = gadget.annotations;
  AssignmentReading out;
  for (const VariableGadget& v : ann.variables) out.assignment.push_back(o.head(v.edge) == v.true_vertex);
  out.r = count_reachability(o).r;
  const std::int64_t slack = static_cast<std::int64_t>(o.graph().num_edges()) +
                             3 * static_cast<std::int64_t>(ann.clauses.size()) - static_cast<std::int64_t>(out.r);
  out.guaranteed = slack >= 0 ? (slack + 1) / 2 : -((-slack) / 2);
  return out;
}

}  // namespace orient
