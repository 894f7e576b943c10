#pragma once

#include <optional>
#include <string>

#include "wordrep/graph.hpp"

namespace wordrep {

struct GraphStats {
  int nodes = 0;
  int edges = 0;
  int max_degree = 0;
  bool two_colorable = false;
  // Exact when the bounded search finished; otherwise the bracket below.
  std::optional<int> chromatic_number;
  int chromatic_lower = 0;  // greedy clique size
  int chromatic_upper = 0;  // greedy coloring size

  // "4" when exact, "[3,5]" when only the bracket is known.
  std::string chromatic_info() const;
};

// Node, edge, degree, and coloring summary. The chromatic number is computed
// exactly by branch and bound when it finishes within node_budget search
// nodes; otherwise only the [clique, greedy] bracket is reported.
GraphStats graph_stats(const Graph& g, long long node_budget = 2'000'000);

}  // namespace wordrep
