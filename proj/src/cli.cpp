#include "orient/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "orient/bridges.hpp"
#include "orient/gadgets.hpp"
#include "orient/generate.hpp"
#include "orient/io.hpp"
#include "orient/min_reach.hpp"
#include "orient/oracle.hpp"
#include "orient/reachability.hpp"
#include "orient/strong_orient.hpp"
#include "orient/tree_orient.hpp"
#include "orient/wto.hpp"

namespace orient {
namespace {

using json = nlohmann::json;

struct Input {
  std::string text;
  std::string digest;
};

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

Input read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError(ParseError::Kind::Malformed, 0, "cannot open '" + path + "'");
    ss << in.rdbuf();
  }
  Input input{ss.str(), {}};
  input.digest = fnv1a(input.text);
  return input;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

json wide_json(Wide v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return to_string(v);
}

json arcs_json(const Orientation& o) {
  auto arcs = o.arcs();
  std::sort(arcs.begin(), arcs.end());
  json out = json::array();
  for (auto [u, v] : arcs) out.push_back({u + 1, v + 1});
  return out;
}

json tree_arcs_json(const TreeOrientation& t) {
  std::vector<Edge> arcs;
  for (int e = 0; e + 1 < t.tree.size(); ++e) arcs.push_back({t.tail(e), t.head(e)});
  std::sort(arcs.begin(), arcs.end());
  json out = json::array();
  for (auto [u, v] : arcs) out.push_back({u + 1, v + 1});
  return out;
}

std::string tree_orientation_text(const TreeOrientation& t, Wide value) {
  std::vector<Edge> arcs;
  for (int e = 0; e + 1 < t.tree.size(); ++e) arcs.push_back({t.tail(e), t.head(e)});
  std::sort(arcs.begin(), arcs.end());
  std::ostringstream os;
  os << "p mixed " << t.tree.size() << ' ' << arcs.size() << '\n';
  for (auto [u, v] : arcs) os << "a " << u + 1 << ' ' << v + 1 << '\n';
  os << "mu " << to_string(value) << '\n';
  return os.str();
}

json one_based(const std::vector<int>& vs) {
  json out = json::array();
  for (int v : vs) out.push_back(v + 1);
  return out;
}

json witness_json(const InfeasibleError& e) {
  json out{{"error", e.what()}};
  if (e.bridge()) out["bridge"] = {e.bridge()->u + 1, e.bridge()->v + 1};
  if (e.cut()) {
    out["one_way_cut"] = {{"side", one_based(e.cut()->side)},
                          {"direction", e.cut()->direction == CutDirection::OutOfSide ? "out" : "in"}};
  }
  return out;
}

struct Options {
  std::string format = "text";
  std::string input;
  bool verify = false;
  std::string dot;
  std::string epsilon = "0.1";
  Weight exact_budget = kDefaultExactBudget;
  bool oracle = false;
  int max_n = kMinReachMaxVertices;
  bool completion = false;
  std::vector<Weight> numbers;
  std::string annotations;
  std::uint64_t seed = 1;
  int size = 10;
  int extra = 5;
  int bridges = -1;
  bool two_edge_connected = false;
  Weight max_weight = 20;
  int clauses = 3;
};

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out), start_(std::chrono::steady_clock::now()) {}

  bool json_mode() const { return opt_.format == "json"; }

  void emit(const std::string& command, const std::string& digest, json result, const std::string& text) {
    if (json_mode()) {
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
      json report{{"command", command}, {"input_digest", digest}, {"elapsed_ms", ms}, {"result", std::move(result)}};
      out_ << report.dump(2) << '\n';
    } else {
      out_ << text;
    }
  }

  int max_orient() {
    const Input in = read_input(opt_.input);
    const Graph g = parse_graph(in.text);
    if (!g.is_connected()) throw InfeasibleError("graph is disconnected");
    const MaxReachResult res = max_reachability_orientation(g);
    json result{{"n", g.num_vertices()},
                {"m", g.num_edges()},
                {"R", res.reach.r},
                {"mu", wide_json(res.mu)},
                {"component_pairs", res.component_pairs},
                {"bridges", res.condensation.map.bridge_of_tree_edge.size()},
                {"components", res.condensation.tree.size()},
                {"centroid_component", res.tree.report.centroid + 1},
                {"orientation", arcs_json(res.orientation)}};
    std::string text = serialize_orientation(res.orientation, "R", std::to_string(res.reach.r));
    int code = kExitOk;
    if (opt_.verify) {
      const std::uint64_t direct = count_reachability(res.orientation).r;
      result["verified"] = direct == res.reach.r;
      result["R_direct"] = direct;
      text += "c verify R_direct " + std::to_string(direct) + (direct == res.reach.r ? " ok\n" : " MISMATCH\n");
      if (direct != res.reach.r) code = kExitFailure;
    }
    if (!opt_.dot.empty()) write_file(opt_.dot, to_dot(res.orientation));
    emit("max-orient", in.digest, std::move(result), text);
    return code;
  }

  int wto() {
    const Input in = read_input(opt_.input);
    const WeightedTree t = parse_wtree(in.text);
    ApproxParams params;
    params.epsilon = parse_epsilon(opt_.epsilon);
    params.exact_budget = opt_.exact_budget;
    const WtoResult res = wto_solve(t, params);
    const MuReport& rep = res.solution.report;
    json result{{"b", t.size()},
                {"mu", wide_json(rep.mu)},
                {"guarantee", res.exact ? "exact" : "1-epsilon"},
                {"epsilon", params.epsilon},
                {"centroid", rep.centroid + 1},
                {"terms",
                 {{"center", wide_json(rep.center_term)},
                  {"partition", wide_json(rep.partition_product)},
                  {"subtrees", wide_json(rep.subtree_sum)}}},
                {"toward", one_based(rep.toward)},
                {"away", one_based(rep.away)},
                {"orientation", tree_arcs_json(res.solution.orientation)}};
    std::string text = tree_orientation_text(res.solution.orientation, rep.mu);
    text += std::string("c guarantee ") + (res.exact ? "exact" : "1-epsilon") + "\n";
    int code = kExitOk;
    if (opt_.oracle) {
      const BruteForceTree bf = brute_force_tree_orientation(t);
      result["oracle_mu"] = wide_json(bf.mu);
      result["oracle_match"] = bf.mu == rep.mu;
      text += "c oracle mu " + to_string(bf.mu) + (bf.mu == rep.mu ? " match\n" : " differs\n");
      if (res.exact && bf.mu != rep.mu) code = kExitFailure;
    }
    emit("wto", in.digest, std::move(result), text);
    return code;
  }

  int min_orient() {
    const Input in = read_input(opt_.input);
    const Graph g = parse_graph(in.text);
    std::uint64_t r;
    Orientation o;
    bool comparability = false;
    if (auto tro = is_transitively_orientable(g)) {
      comparability = true;
      o = *tro;
      r = static_cast<std::uint64_t>(g.num_edges());
    } else {
      MinReachResult res = min_reachability_bruteforce(g, opt_.max_n);
      r = res.r;
      o = std::move(res.orientation);
    }
    json result{{"r", r},
                {"c_bar", r - static_cast<std::uint64_t>(g.num_edges())},
                {"comparability", comparability},
                {"acyclic", is_acyclic(o)},
                {"orientation", arcs_json(o)}};
    std::string text = serialize_orientation(o, "R", std::to_string(r));
    text += "c c_bar " + std::to_string(r - static_cast<std::uint64_t>(g.num_edges())) + "\n";
    if (opt_.completion) {
      const CompletionResult cr = comparability_completion_bruteforce(g);
      json added = json::array();
      for (auto [u, v] : cr.added) added.push_back({u + 1, v + 1});
      result["completion"] = {{"c_bar", cr.added_count}, {"added", added}};
      text += "c completion c_bar " + std::to_string(cr.added_count) + "\n";
    }
    emit("min-orient", in.digest, std::move(result), text);
    return kExitOk;
  }

  int strong_orient() {
    const Input in = read_input(opt_.input);
    const Graph g = parse_graph(in.text);
    const Orientation o = strong_orientation(g);
    const std::uint64_t r = count_reachability(o).r;
    emit("strong-orient", in.digest, {{"R", r}, {"strong", is_strongly_connected(o)}, {"orientation", arcs_json(o)}},
         serialize_orientation(o, "R", std::to_string(r)));
    return kExitOk;
  }

  int complete() {
    const Input in = read_input(opt_.input);
    const MixedGraph m = parse_mixed(in.text);
    const Orientation o = complete_strong(m);
    const std::uint64_t r = count_reachability(o).r;
    emit("complete", in.digest, {{"R", r}, {"strong", is_strongly_connected(o)}, {"orientation", arcs_json(o)}},
         serialize_orientation(o, "R", std::to_string(r)));
    return kExitOk;
  }

  int check() {
    const Input in = read_input(opt_.input);
    const Orientation o = parse_orientation(in.text);
    const Digraph d = o.to_digraph();
    const std::uint64_t r = count_reachability(d).r;
    const bool strong = is_strongly_connected(d), acyclic = is_acyclic(d), transitive = is_transitive(o);
    std::ostringstream text;
    text << "n " << o.graph().num_vertices() << "\nm " << o.graph().num_edges() << "\nR " << r << "\nstrong "
         << (strong ? "true" : "false") << "\nacyclic " << (acyclic ? "true" : "false") << "\ntransitive "
         << (transitive ? "true" : "false") << '\n';
    emit("check", in.digest,
         {{"n", o.graph().num_vertices()},
          {"m", o.graph().num_edges()},
          {"R", r},
          {"strong", strong},
          {"acyclic", acyclic},
          {"transitive", transitive}},
         text.str());
    return kExitOk;
  }

  int gadget_partition() {
    const WtoGadget gad = partition_to_wto(opt_.numbers);
    std::string text = serialize_wtree(gad.tree);
    text += "c threshold " + to_string(gad.threshold) + (gad.odd_sum ? " odd-sum\n" : "\n");
    std::ostringstream digest_src;
    for (Weight a : opt_.numbers) digest_src << a << ' ';
    emit("gadget partition", fnv1a(digest_src.str()),
         {{"threshold", wide_json(gad.threshold)},
          {"total", gad.total},
          {"odd_sum", gad.odd_sum},
          {"wtree", serialize_wtree(gad.tree)}},
         text);
    return kExitOk;
  }

  int gadget_nae3sat() {
    const Input in = read_input(opt_.input);
    const Nae3SatInstance inst = parse_dimacs_cnf(in.text);
    const NaeGadget gad = nae3sat_to_graph(inst);
    const json ann = annotations_json(gad.annotations);
    if (!opt_.annotations.empty()) write_file(opt_.annotations, ann.dump(2) + "\n");
    emit("gadget nae3sat", in.digest,
         {{"n", gad.graph.num_vertices()},
          {"m", gad.graph.num_edges()},
          {"clauses", inst.clauses.size()},
          {"graph", serialize_graph(gad.graph)},
          {"annotations", ann}},
         serialize_graph(gad.graph));
    return kExitOk;
  }

  int oracle_tree() {
    const Input in = read_input(opt_.input);
    const WeightedTree t = parse_wtree(in.text);
    const BruteForceTree bf = brute_force_tree_orientation(t);
    emit("oracle tree", in.digest, {{"mu", wide_json(bf.mu)}, {"orientation", tree_arcs_json(bf.orientation)}},
         tree_orientation_text(bf.orientation, bf.mu));
    return kExitOk;
  }

  int oracle_graph() {
    const Input in = read_input(opt_.input);
    const Graph g = parse_graph(in.text);
    const OrientationRange range = brute_force_orientations(g);
    emit("oracle graph", in.digest,
         {{"max_R", range.max_r}, {"min_R", range.min_r}, {"orientation", arcs_json(range.argmax)}},
         serialize_orientation(range.argmax, "R", std::to_string(range.max_r)));
    return kExitOk;
  }

  int oracle_min() {
    const Input in = read_input(opt_.input);
    const Graph g = parse_graph(in.text);
    const MinReachResult res = min_reachability_bruteforce(g, opt_.max_n);
    emit("oracle min", in.digest,
         {{"r", res.r},
          {"c_bar", res.closure_edges_added},
          {"acyclic", is_acyclic(res.orientation)},
          {"orientation", arcs_json(res.orientation)}},
         serialize_orientation(res.orientation, "R", std::to_string(res.r)));
    return kExitOk;
  }

  int gen_tree() {
    Rng rng(opt_.seed);
    out_ << serialize_wtree(random_weighted_tree(opt_.size, opt_.max_weight, rng));
    return kExitOk;
  }

  int gen_graph() {
    Rng rng(opt_.seed);
    Graph g = opt_.bridges >= 0            ? random_graph_with_bridges(opt_.size, opt_.bridges, rng)
              : opt_.two_edge_connected ? random_two_edge_connected_graph(opt_.size, opt_.extra, rng)
                                        : random_connected_graph(opt_.size, opt_.extra, rng);
    out_ << serialize_graph(g);
    return kExitOk;
  }

  int gen_cnf() {
    Rng rng(opt_.seed);
    out_ << serialize_dimacs_cnf(random_nae3sat(opt_.size, opt_.clauses, rng));
    return kExitOk;
  }

  static json annotations_json(const GadgetAnnotations& ann) {
    json vars = json::array();
    for (std::size_t x = 0; x < ann.variables.size(); ++x) {
      const auto& v = ann.variables[x];
      vars.push_back({{"var", x + 1}, {"T", v.true_vertex + 1}, {"F", v.false_vertex + 1}});
    }
    json clauses = json::array();
    for (const ClauseGadget& cg : ann.clauses) {
      json lits = json::array(), conns = json::array();
      for (const LiteralGadget& l : cg.literals) {
        lits.push_back({{"literal", l.literal.negated ? -(l.literal.var + 1) : l.literal.var + 1},
                        {"T", l.true_end + 1},
                        {"F", l.false_end + 1}});
      }
      for (const ConnectorPath& p : cg.connectors)
        conns.push_back({p.cycle_vertex + 1, p.midpoint + 1, p.variable_vertex + 1});
      std::vector<int> cycle(cg.cycle.begin(), cg.cycle.end()), dark(cg.darkened.begin(), cg.darkened.end());
      clauses.push_back({{"cycle", one_based(cycle)}, {"darkened", one_based(dark)}, {"literals", lits},
                         {"connectors", conns}});
    }
    return {{"variables", vars}, {"clauses", clauses}};
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph orientation solvers for reachability", "orient"};
  app.require_subcommand(1);
  Options opt;
  int (Runner::*action)() = nullptr;
  std::string chosen;

  auto format_flag = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto input_arg = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", opt.input, what)->required();
  };
  auto bind = [&](CLI::App* sub, int (Runner::*fn)()) {
    sub->callback([&action, &chosen, fn, sub] {
      action = fn;
      chosen = sub->get_name();
    });
  };

  auto* max = app.add_subcommand("max-orient", "Orient a graph to maximize reachability");
  input_arg(max, "Graph file ('-' for stdin)");
  max->add_flag("--verify", opt.verify, "Recount R directly on the orientation");
  max->add_option("--dot", opt.dot, "Also write the orientation as Graphviz DOT");
  format_flag(max);
  bind(max, &Runner::max_orient);

  auto* wto = app.add_subcommand("wto", "Weighted tree orientation (exact or FPTAS)");
  input_arg(wto, "Weighted tree file");
  wto->add_option("--epsilon", opt.epsilon, "Accuracy in (0,1], decimal or p/q")->capture_default_str();
  wto->add_option("--exact-budget", opt.exact_budget, "Largest weight total solved by exact DP")
      ->capture_default_str();
  wto->add_flag("--oracle", opt.oracle, "Compare with exhaustive enumeration");
  format_flag(wto);
  bind(wto, &Runner::wto);

  auto* minr = app.add_subcommand("min-orient", "Minimum-reachability orientation");
  input_arg(minr, "Graph file");
  minr->add_option("--max-n", opt.max_n, "Vertex bound for exhaustive search")->capture_default_str();
  minr->add_flag("--completion", opt.completion, "Also search a minimum comparability completion");
  format_flag(minr);
  bind(minr, &Runner::min_orient);

  auto* strong = app.add_subcommand("strong-orient", "Strong orientation of a 2-edge-connected graph");
  input_arg(strong, "Graph file");
  format_flag(strong);
  bind(strong, &Runner::strong_orient);

  auto* comp = app.add_subcommand("complete", "Complete a partial orientation to a strong one");
  input_arg(comp, "Mixed graph file");
  format_flag(comp);
  bind(comp, &Runner::complete);

  auto* check = app.add_subcommand("check", "Report R and properties of an orientation");
  input_arg(check, "Orientation file (mixed format, all arcs)");
  format_flag(check);
  bind(check, &Runner::check);

  auto* gadget = app.add_subcommand("gadget", "Hardness-reduction instances");
  gadget->require_subcommand(1);
  auto* gpart = gadget->add_subcommand("partition", "PARTITION numbers to a weighted star");
  gpart->add_option("numbers", opt.numbers, "Positive integers")->required();
  format_flag(gpart);
  bind(gpart, &Runner::gadget_partition);
  auto* gnae = gadget->add_subcommand("nae3sat", "DIMACS cnf to the clause-gadget graph");
  input_arg(gnae, "CNF file");
  gnae->add_option("--annotations", opt.annotations, "Write the JSON annotation sidecar here");
  format_flag(gnae);
  bind(gnae, &Runner::gadget_nae3sat);

  auto* oracle = app.add_subcommand("oracle", "Exhaustive reference solvers");
  oracle->require_subcommand(1);
  auto* otree = oracle->add_subcommand("tree", "Best of all tree orientations");
  input_arg(otree, "Weighted tree file");
  format_flag(otree);
  bind(otree, &Runner::oracle_tree);
  auto* ograph = oracle->add_subcommand("graph", "Max and min R over all orientations");
  input_arg(ograph, "Graph file");
  format_flag(ograph);
  bind(ograph, &Runner::oracle_graph);
  auto* omin = oracle->add_subcommand("min", "Minimum R over vertex orders");
  input_arg(omin, "Graph file");
  omin->add_option("--max-n", opt.max_n, "Vertex bound")->capture_default_str();
  format_flag(omin);
  bind(omin, &Runner::oracle_min);

  auto* gen = app.add_subcommand("gen", "Random instances");
  gen->require_subcommand(1);
  auto seed_flag = [&](CLI::App* sub) { sub->add_option("--seed", opt.seed, "RNG seed")->capture_default_str(); };
  auto* gtree = gen->add_subcommand("tree", "Random weighted tree");
  gtree->add_option("--b", opt.size, "Vertex count")->capture_default_str();
  gtree->add_option("--max-weight", opt.max_weight, "Largest weight")->capture_default_str();
  seed_flag(gtree);
  bind(gtree, &Runner::gen_tree);
  auto* ggraph = gen->add_subcommand("graph", "Random connected graph");
  ggraph->add_option("--n", opt.size, "Vertex count")->capture_default_str();
  ggraph->add_option("--extra", opt.extra, "Edges beyond the spanning tree or cycle")->capture_default_str();
  ggraph->add_flag("--two-edge-connected", opt.two_edge_connected, "Start from a Hamiltonian cycle");
  ggraph->add_option("--bridges", opt.bridges, "Blocks joined by this many bridges");
  seed_flag(ggraph);
  bind(ggraph, &Runner::gen_graph);
  auto* gcnf = gen->add_subcommand("cnf", "Random 3-literal cnf");
  gcnf->add_option("--vars", opt.size, "Variables")->capture_default_str();
  gcnf->add_option("--clauses", opt.clauses, "Clauses")->capture_default_str();
  seed_flag(gcnf);
  bind(gcnf, &Runner::gen_cnf);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
  if (action == nullptr) {
    err << app.help();
    return kExitParse;
  }

  Runner runner(opt, out);
  try {
    return (runner.*action)();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InfeasibleError& e) {
    if (runner.json_mode())
      out << json{{"command", chosen}, {"result", witness_json(e)}}.dump(2) << '\n';
    err << "infeasible: " << e.what();
    if (e.bridge()) err << " (bridge " << e.bridge()->u + 1 << ' ' << e.bridge()->v + 1 << ')';
    if (e.cut()) {
      err << " (side {";
      for (std::size_t i = 0; i < e.cut()->side.size(); ++i) err << (i ? " " : "") << e.cut()->side[i] + 1;
      err << "}, every cut arc " << (e.cut()->direction == CutDirection::OutOfSide ? "leaves" : "enters") << " it)";
    }
    err << '\n';
    return kExitInfeasible;
  } catch (const SizeLimitError& e) {
    err << "size bound: " << e.what() << '\n';
    return kExitSizeBound;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace orient
