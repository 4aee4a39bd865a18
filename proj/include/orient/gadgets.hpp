#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orient/graph.hpp"

namespace orient {

// ---------------------------------------------------------------------------
// PARTITION -> weighted tree orientation

/// Star with a centre of weight S = sum(a) and one leaf per a_i. Some
/// orientation reaches mu >= threshold = 5 (S/2)^2 exactly when a splits
/// into two halves of equal sum. An odd S can never split; the threshold is
/// then rounded up to ceil(5 S^2 / 4), which no orientation reaches.
struct WtoGadget {
  WeightedTree tree;
  Wide threshold = 0;
  Weight total = 0;
  bool odd_sum = false;
};

WtoGadget partition_to_wto(std::span<const Weight> a);

// ---------------------------------------------------------------------------
// NOT-ALL-EQUAL 3SAT -> minimum reachability orientation

struct Literal {
  int var = 0;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct Nae3SatInstance {
  int num_vars = 0;
  std::vector<Clause> clauses;
};

/// DIMACS cnf. Clauses with one or two literals are padded by repeating
/// their last literal; more than three literals is an error.
Nae3SatInstance parse_dimacs_cnf(std::string_view text);
std::string serialize_dimacs_cnf(const Nae3SatInstance& inst);

/// Clauses with at least one true and at least one false literal.
int nae_count(const Nae3SatInstance& inst, const std::vector<bool>& assignment);

struct VariableGadget {
  int edge;
  int true_vertex;   // xT
  int false_vertex;  // xF
};

/// Literal j of a clause sits on cycle positions (3j, 3j+1). The lower
/// position is its T end.
struct LiteralGadget {
  Literal literal;
  int edge;
  int true_end;
  int false_end;
};

/// Length-2 path from a literal end on the 9-cycle to a variable vertex.
struct ConnectorPath {
  int cycle_vertex;
  int midpoint;
  int variable_vertex;
  std::array<int, 2> edges;  // cycle side first
};

struct ClauseGadget {
  std::array<int, 9> cycle;        // vertices in cycle order
  std::array<int, 9> cycle_edges;  // cycle_edges[i] joins cycle[i], cycle[(i+1) % 9]
  std::array<LiteralGadget, 3> literals;
  std::array<int, 3> darkened;  // cycle positions 2, 5, 8
  /// connectors[2j] leaves the T end of literal j, connectors[2j+1] the F end.
  std::array<ConnectorPath, 6> connectors;
};

struct GadgetAnnotations {
  std::vector<VariableGadget> variables;
  std::vector<ClauseGadget> clauses;
};

struct NaeGadget {
  Graph graph;
  GadgetAnnotations annotations;
};

/// One edge per variable, one 9-cycle plus six connector 2-paths per clause:
/// num_vars + 21 m edges. A positive literal x joins T end to xF and F end
/// to xT; a negated one joins T end to xT and F end to xF.
NaeGadget nae3sat_to_graph(const Nae3SatInstance& inst);

/// Orientation whose R is |E| + 3m - 2 * nae_count. The variable edge points
/// at xT when x is true; every 6-cycle through a variable edge alternates;
/// the six free edges of each 9-cycle are chosen by exhaustive search over
/// 2^6 settings minimizing reachable pairs inside the clause.
Orientation assignment_to_orientation(const NaeGadget& gadget, const std::vector<bool>& assignment);

struct AssignmentReading {
  std::vector<bool> assignment;
  std::uint64_t r = 0;
  /// ceil((|E| + 3m - R) / 2); may be negative.
  std::int64_t guaranteed = 0;
};

/// Reads x = true where the variable edge points at xT.
AssignmentReading orientation_to_assignment(const NaeGadget& gadget, const Orientation& o);

}  // namespace orient
