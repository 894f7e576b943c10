#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Direction of edge i relative to its stored (min, max) endpoints.
enum class EdgeDirection : std::uint8_t { Forward, Backward, Undirected };

// An orientation of a base graph: one direction per stored edge. Complete
// when no edge is left undirected.
class Orientation {
 public:
  Orientation(Graph base, std::vector<EdgeDirection> dirs);
  static Orientation all_undirected(Graph base);

  const Graph& base() const { return base_; }
  EdgeDirection direction(EdgeIndex i) const { return dirs_[static_cast<size_t>(i)]; }
  void set_direction(EdgeIndex i, EdgeDirection d) { dirs_[static_cast<size_t>(i)] = d; }
  bool is_complete() const;
  int directed_count() const;

  // Arc list: (tail, head) for every directed edge, in stored edge order.
  std::vector<std::pair<int, int>> arcs() const;

  // One character per edge in stored order: F, B, or U.
  std::string to_string() const;
  static Orientation from_string(Graph base, std::string_view s);

  // Graphviz digraph; undirected edges are drawn without an arrowhead.
  std::string to_dot(const std::vector<std::string>& labels = {}) const;

  bool operator==(const Orientation&) const = default;

 private:
  Graph base_;
  std::vector<EdgeDirection> dirs_;
};

// A directed path v_0 -> ... -> v_k (k >= 3 arcs) whose closing arc
// v_0 -> v_k is present while the arc for the non-consecutive pair
// (path[i], path[j]) is absent. The missing pair can touch the endpoints but
// is never the closing pair itself.
struct ShortcutWitness {
  std::vector<int> path;
  std::pair<int, int> missing;  // vertices (path[i], path[j]), i < j
};

// Mechanically replays a witness against an orientation: all path arcs and
// the closing arc must be present, the missing pair absent and
// non-consecutive.
bool witness_valid(const Orientation& o, const ShortcutWitness& w);

// Cycle and order checks require a complete orientation and throw
// std::invalid_argument otherwise.
bool is_acyclic(const Orientation& o);
std::optional<std::vector<int>> topological_order(const Orientation& o);

// First shortcut with at most max_len path arcs, scanning path starts in
// topological order; nullopt when none exists. Requires a complete acyclic
// orientation. max_len = 3 finds exactly the length-3 (four-vertex)
// violations.
std::optional<ShortcutWitness> find_shortcut(const Orientation& o, int max_len);
std::optional<ShortcutWitness> find_shortcut(const Orientation& o);  // unbounded

// Acyclic with no shortcut of any length / no shortcut of length exactly 3.
bool is_semi_transitive(const Orientation& o);
bool is_3_semi_transitive(const Orientation& o);

enum class SearchMode { SemiTransitive, ThreeSemiTransitive };

// First orientation of g that passes the mode's check, trying edges in
// stored order with Forward before Backward and edge 0 fixed Forward
// (reversing every arc preserves both properties). Nullopt when none exists.
// Throws std::invalid_argument when g has more than max_edges edges.
std::optional<Orientation> exhaustive_orientation_search(const Graph& g, SearchMode mode,
                                                         int max_edges = 24);

}  // namespace wordrep
