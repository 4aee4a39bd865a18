#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "orient/graph.hpp"

namespace orient {

// Line formats (1-indexed vertices, whitespace separated, `c` comment lines):
//   graph:  p graph <n> <m>   then  e <u> <v>
//   mixed:  p mixed <n> <m>   then  e <u> <v> (undirected) | a <u> <v> (arc u->v)
//   wtree:  p wtree <b>       then  v <i> <wt>  and  e <i> <j>
// Errors are ParseError carrying the offending line number.

Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// Also accepts a `p graph` header and trailing `R <value>` / `mu <value>`
/// summary lines, so that orientation output can be read back.
MixedGraph parse_mixed(std::string_view text);
std::string serialize_mixed(const MixedGraph& m);

WeightedTree parse_wtree(std::string_view text);
std::string serialize_wtree(const WeightedTree& t);

/// Orientation as a fully oriented mixed-graph file with arcs sorted by
/// (tail, head), followed by `<summary_key> <summary_value>` when given.
std::string serialize_orientation(const Orientation& o, std::string_view summary_key = {},
                                  std::string_view summary_value = {});

/// Orientation read from a mixed file; every edge must be an arc.
Orientation parse_orientation(std::string_view text);

/// Graphviz export.
std::string to_dot(const Orientation& o);

}  // namespace orient
