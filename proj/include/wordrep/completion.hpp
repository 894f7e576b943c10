#pragma once

#include <optional>
#include <string>

#include "wordrep/orientation.hpp"
#include "wordrep/qcbo.hpp"

namespace wordrep {

// Spin-induced partial orientation of a line graph: edge {i, j} is directed
// iff x_i != x_j, and then from the +1 endpoint to the -1 endpoint.
struct PartialOrientation {
  Orientation orientation;
  SpinVector spins;
};

// Throws std::invalid_argument when the spin length differs from the vertex
// count or an entry is not +1 / -1.
PartialOrientation partial_orientation_from_spins(const Graph& lg, const SpinVector& x);

// Directs the undirected edges in stored order. Per edge {i, j} with i < j:
// (a) when one direction would close a directed cycle, take the other;
// (b) otherwise, when vertices k, m exist with (i->k and j->k, or k->i and
//     k->j) and i->m and m->j, direct i->j (symmetrically j->i);
// (c) otherwise direct low index -> high index.
// A dead end backtracks chronologically over prior rule-(c) choices. Returns
// nullopt when the directed part is already cyclic, when backtracking
// exhausts, or when the placement budget runs out; that is not a proof that
// no completion exists. A returned orientation is always complete and
// acyclic.
std::optional<Orientation> complete_orientation(const Orientation& partial,
                                                long long node_budget = 1'000'000);
std::optional<Orientation> complete_orientation(const PartialOrientation& p,
                                                long long node_budget = 1'000'000);

// Exhaustive search over the undirected slots only, keeping every arc of the
// partial: depth-first in stored edge order, low->high first, pruning any
// branch that closes a directed cycle or makes some length-3 shortcut
// permanent (its closing pattern is fully placed and a required chord is a
// non-edge or already directed the wrong way). The returned orientation is
// re-checked by the independent checker before being accepted. Returns
// nullopt when no completion passes or the node budget runs out.
std::optional<Orientation> search_completion_3sto(const Orientation& partial,
                                                  long long node_budget = 5'000'000);

struct DecideOptions {
  long long solver_budget = 5'000'000;     // decision nodes for the spin search
  long long completion_budget = 1'000'000; // placements for the greedy pass
  long long search_budget = 5'000'000;     // nodes for the slot search fallback
  int exhaustive_bound = 24;               // max line-graph edges for full search
  bool optimize = false;                   // minimize the objective before completing
};

// Outcome of the full pipeline on a root graph g. n and m are g's counts;
// spins and the orientation live on line_graph(g). The orientation is
// present iff verified_3sto, and is then the checker-certified evidence.
// verified_sto means the same orientation has no shortcut of any length.
// certified_non_3sto can only be set by an exhaustive search that visited
// every acyclic orientation; a bare Infeasible never implies it.
struct Decision {
  std::string graph_name;
  int n = 0;
  int m = 0;
  SolveStatus qcbo_status = SolveStatus::Infeasible;
  SpinVector spins;
  std::optional<Orientation> orientation;
  bool verified_3sto = false;
  bool verified_sto = false;
  bool certified_non_3sto = false;
  std::string certification = "none";  // partial_completion | completion_search |
                                       // exhaustive_search | none
  long long nodes_explored = 0;
  long long elapsed_ms = 0;
};

// build_qcbo -> solve_qcbo -> single-flip improvement -> spin partial ->
// greedy completion -> checker; on an uncertified result, the slot search,
// then a full orientation search when the line graph is within the bound.
// After an Infeasible solve the exhaustive stage still runs (within bound) so
// the record can distinguish certified non-existence from mere infeasibility.
Decision decide_line_graph_3sto(const Graph& g, const DecideOptions& opts = {});

std::string decision_to_json(const Decision& d);

}  // namespace wordrep
