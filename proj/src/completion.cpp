#include "wordrep/completion.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <stdexcept>

#include "json.hpp"

namespace wordrep {

namespace {

// Mutable arc set with O(1) membership and push/pop updates.
struct ArcState {
  int n;
  std::vector<std::vector<std::uint8_t>> arc;
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> in;

  explicit ArcState(int vertices)
      : n(vertices),
        arc(static_cast<size_t>(vertices),
            std::vector<std::uint8_t>(static_cast<size_t>(vertices), 0)),
        out(static_cast<size_t>(vertices)),
        in(static_cast<size_t>(vertices)) {}

  void place(int a, int b) {
    arc[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
    out[static_cast<size_t>(a)].push_back(b);
    in[static_cast<size_t>(b)].push_back(a);
  }

  void unplace(int a, int b) {
    arc[static_cast<size_t>(a)][static_cast<size_t>(b)] = 0;
    out[static_cast<size_t>(a)].pop_back();
    in[static_cast<size_t>(b)].pop_back();
  }

  bool reaches(int from, int to) const {
    if (from == to) return true;
    std::vector<int> stack = {from};
    std::vector<std::uint8_t> seen(static_cast<size_t>(n), 0);
    seen[static_cast<size_t>(from)] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : out[static_cast<size_t>(v)]) {
        if (w == to) return true;
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    return false;
  }

  bool has_cycle() const {
    std::vector<int> indeg(static_cast<size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
      for (int v : out[static_cast<size_t>(u)]) ++indeg[static_cast<size_t>(v)];
    }
    std::vector<int> ready;
    for (int v = 0; v < n; ++v) {
      if (indeg[static_cast<size_t>(v)] == 0) ready.push_back(v);
    }
    int visited = 0;
    while (!ready.empty()) {
      const int v = ready.back();
      ready.pop_back();
      ++visited;
      for (int w : out[static_cast<size_t>(v)]) {
        if (--indeg[static_cast<size_t>(w)] == 0) ready.push_back(w);
      }
    }
    return visited != n;
  }
};

std::vector<EdgeIndex> undirected_slots(const Orientation& o) {
  std::vector<EdgeIndex> slots;
  for (int i = 0; i < o.base().edge_count(); ++i) {
    if (o.direction(i) == EdgeDirection::Undirected) slots.push_back(i);
  }
  return slots;
}

struct GreedyCompletion {
  const Graph& base;
  ArcState st;
  Orientation o;
  std::vector<EdgeIndex> slots;
  long long budget;
  long long steps = 0;
  bool budget_out = false;

  GreedyCompletion(const Orientation& partial, long long node_budget)
      : base(partial.base()),
        st(partial.base().vertex_count()),
        o(partial),
        slots(undirected_slots(partial)),
        budget(node_budget) {
    for (auto [a, b] : partial.arcs()) st.place(a, b);
  }

  // Common out- or in-neighbor k plus a two-step path i -> m -> j.
  bool wants_forward(int i, int j) const {
    bool common = false;
    for (int k = 0; k < st.n && !common; ++k) {
      const auto& row_i = st.arc[static_cast<size_t>(i)];
      const auto& row_j = st.arc[static_cast<size_t>(j)];
      const auto& col = st.arc[static_cast<size_t>(k)];
      if ((row_i[static_cast<size_t>(k)] && row_j[static_cast<size_t>(k)]) ||
          (col[static_cast<size_t>(i)] && col[static_cast<size_t>(j)])) {
        common = true;
      }
    }
    if (!common) return false;
    for (int m : st.out[static_cast<size_t>(i)]) {
      if (st.arc[static_cast<size_t>(m)][static_cast<size_t>(j)]) return true;
    }
    return false;
  }

  bool dfs(size_t pos) {
    if (pos == slots.size()) return true;
    if (++steps > budget) {
      budget_out = true;
      return false;
    }
    const auto& [i, j] = base.edge(slots[pos]);
    const bool cycle_fwd = st.reaches(j, i);  // i -> j would close a cycle
    const bool cycle_bwd = st.reaches(i, j);
    if (cycle_fwd && cycle_bwd) return false;
    bool forward_first = true;
    bool free_choice = false;
    if (cycle_fwd) {
      forward_first = false;
    } else if (cycle_bwd || wants_forward(i, j)) {
      forward_first = true;
    } else if (wants_forward(j, i)) {
      forward_first = false;
    } else {
      free_choice = true;  // default rule: low -> high, flippable on backtrack
    }
    for (int t = 0; t < (free_choice ? 2 : 1); ++t) {
      const bool forward = t == 0 ? forward_first : !forward_first;
      const int a = forward ? i : j;
      const int b = forward ? j : i;
      st.place(a, b);
      o.set_direction(slots[pos], forward ? EdgeDirection::Forward : EdgeDirection::Backward);
      if (dfs(pos + 1)) return true;
      st.unplace(a, b);
      o.set_direction(slots[pos], EdgeDirection::Undirected);
      if (budget_out) return false;
    }
    return false;
  }
};

struct SlotSearch {
  const Graph& base;
  ArcState st;
  Orientation o;
  std::vector<EdgeIndex> slots;
  long long budget;
  long long steps = 0;
  bool budget_out = false;

  SlotSearch(const Orientation& partial, long long node_budget)
      : base(partial.base()),
        st(partial.base().vertex_count()),
        o(partial),
        slots(undirected_slots(partial)),
        budget(node_budget) {
    for (auto [a, b] : partial.arcs()) st.place(a, b);
  }

  // Arc x -> y can never appear: the pair is a non-edge, or its slot is
  // already directed y -> x.
  bool chord_impossible(int x, int y) const {
    if (st.arc[static_cast<size_t>(x)][static_cast<size_t>(y)]) return false;
    const auto e = base.edge_index(x, y);
    if (!e.has_value()) return true;
    return o.direction(*e) != EdgeDirection::Undirected;
  }

  // Path p0 -> p1 -> p2 -> p3 with closing arc p0 -> p3, all five arcs
  // present: the pattern is doomed once either chord can never be placed.
  bool doomed(int p0, int p1, int p2, int p3) const {
    return chord_impossible(p0, p2) || chord_impossible(p1, p3);
  }

  // Full scan of the current arcs, used once on the input partial.
  bool any_doomed_pattern() const {
    for (int a = 0; a < st.n; ++a) {
      for (int b : st.out[static_cast<size_t>(a)]) {
        for (int c : st.out[static_cast<size_t>(b)]) {
          for (int d : st.out[static_cast<size_t>(c)]) {
            if (st.arc[static_cast<size_t>(a)][static_cast<size_t>(d)] && doomed(a, b, c, d)) {
              return true;
            }
          }
        }
      }
    }
    return false;
  }

  // Incremental version: does the just-placed arc u -> v complete a doomed
  // pattern (in any of its five arc roles) or occupy the slot of a chord
  // some fully placed pattern still needed?
  bool creates_doomed_pattern(int u, int v) const {
    const auto& out_u = st.out[static_cast<size_t>(u)];
    const auto& out_v = st.out[static_cast<size_t>(v)];
    const auto& in_u = st.in[static_cast<size_t>(u)];
    const auto& in_v = st.in[static_cast<size_t>(v)];
    const auto present = [&](int x, int y) {
      return st.arc[static_cast<size_t>(x)][static_cast<size_t>(y)] != 0;
    };
    for (int b : out_u) {  // closing arc: u -> b -> c -> v, closes u -> v
      for (int c : st.out[static_cast<size_t>(b)]) {
        if (present(c, v) && doomed(u, b, c, v)) return true;
      }
    }
    for (int c : out_v) {  // first path arc: u -> v -> c -> d
      for (int d : st.out[static_cast<size_t>(c)]) {
        if (present(u, d) && doomed(u, v, c, d)) return true;
      }
    }
    for (int a : in_u) {  // middle path arc: a -> u -> v -> d
      for (int d : out_v) {
        if (present(a, d) && doomed(a, u, v, d)) return true;
      }
    }
    for (int b : in_u) {  // last path arc: a -> b -> u -> v
      for (int a : st.in[static_cast<size_t>(b)]) {
        if (present(a, v) && doomed(a, b, u, v)) return true;
      }
    }
    // u -> v kills chord v -> u of pattern v -> b -> u -> d (chord p0 -> p2)
    for (int b : out_v) {
      if (!present(b, u)) continue;
      for (int d : out_u) {
        if (present(v, d)) return true;
      }
    }
    // u -> v kills chord v -> u of pattern a -> v -> c -> u (chord p1 -> p3)
    for (int c : out_v) {
      if (!present(c, u)) continue;
      for (int a : in_v) {
        if (present(a, u)) return true;
      }
    }
    return false;
  }

  bool dfs(size_t pos) {
    if (pos == slots.size()) return is_3_semi_transitive(o);
    const auto& [i, j] = base.edge(slots[pos]);
    for (int t = 0; t < 2; ++t) {
      if (++steps > budget) {
        budget_out = true;
        return false;
      }
      const bool forward = t == 0;
      const int a = forward ? i : j;
      const int b = forward ? j : i;
      if (st.reaches(b, a)) continue;
      st.place(a, b);
      o.set_direction(slots[pos], forward ? EdgeDirection::Forward : EdgeDirection::Backward);
      if (!creates_doomed_pattern(a, b) && dfs(pos + 1)) return true;
      st.unplace(a, b);
      o.set_direction(slots[pos], EdgeDirection::Undirected);
      if (budget_out) return false;
    }
    return false;
  }
};

}  // namespace

PartialOrientation partial_orientation_from_spins(const Graph& lg, const SpinVector& x) {
  if (static_cast<int>(x.size()) != lg.vertex_count()) {
    throw std::invalid_argument("partial_orientation_from_spins: one spin per vertex required");
  }
  for (int s : x) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("partial_orientation_from_spins: spins must be +1 or -1");
    }
  }
  Orientation o = Orientation::all_undirected(lg);
  for (int i = 0; i < lg.edge_count(); ++i) {
    const auto& [u, v] = lg.edge(i);
    const int su = x[static_cast<size_t>(u)];
    const int sv = x[static_cast<size_t>(v)];
    if (su == 1 && sv == -1) o.set_direction(i, EdgeDirection::Forward);
    if (su == -1 && sv == 1) o.set_direction(i, EdgeDirection::Backward);
  }
  return PartialOrientation{std::move(o), x};
}

std::optional<Orientation> complete_orientation(const Orientation& partial,
                                                long long node_budget) {
  GreedyCompletion search(partial, node_budget);
  if (search.st.has_cycle()) return std::nullopt;  // no acyclic completion exists
  if (search.dfs(0)) return search.o;
  return std::nullopt;
}

std::optional<Orientation> complete_orientation(const PartialOrientation& p,
                                                long long node_budget) {
  return complete_orientation(p.orientation, node_budget);
}

std::optional<Orientation> search_completion_3sto(const Orientation& partial,
                                                  long long node_budget) {
  SlotSearch search(partial, node_budget);
  if (search.st.has_cycle()) return std::nullopt;
  if (search.any_doomed_pattern()) return std::nullopt;
  if (search.dfs(0)) return search.o;
  return std::nullopt;
}

Decision decide_line_graph_3sto(const Graph& g, const DecideOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  Decision d;
  d.n = g.vertex_count();
  d.m = g.edge_count();
  const Graph lg = line_graph(g);
  const QcboProblem p = build_qcbo(g);
  SolveOptions sopts;
  sopts.optimize = opts.optimize;
  sopts.node_budget = opts.solver_budget;
  const QcboSolution sol = solve_qcbo(p, sopts);
  d.qcbo_status = sol.status;
  d.nodes_explored = sol.nodes_explored;

  const auto certify = [&](const Orientation& cand, const char* how) {
    if (!is_3_semi_transitive(cand)) return false;
    d.orientation = cand;
    d.verified_3sto = true;
    d.verified_sto = !find_shortcut(cand).has_value();
    d.certification = how;
    return true;
  };

  bool done = false;
  if (sol.status == SolveStatus::Feasible) {
    d.spins = improve_spins(p, sol.spins);
    const PartialOrientation part = partial_orientation_from_spins(lg, d.spins);
    if (const auto completed = complete_orientation(part, opts.completion_budget)) {
      done = certify(*completed, "partial_completion");
    }
    if (!done) {
      if (const auto found = search_completion_3sto(part.orientation, opts.search_budget)) {
        done = certify(*found, "completion_search");
      }
    }
  }
  if (!done && lg.edge_count() <= opts.exhaustive_bound) {
    if (const auto found =
            exhaustive_orientation_search(lg, SearchMode::ThreeSemiTransitive, opts.exhaustive_bound)) {
      certify(*found, "exhaustive_search");
    } else {
      d.certified_non_3sto = true;
    }
  }
  d.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return d;
}

std::string decision_to_json(const Decision& d) {
  nlohmann::ordered_json j;
  j["graph_name"] = d.graph_name;
  j["n"] = d.n;
  j["m"] = d.m;
  j["qcbo_status"] = to_string(d.qcbo_status);
  j["spins"] = d.spins;
  j["orientation_string"] = d.orientation.has_value() ? d.orientation->to_string() : "";
  j["verified_3sto"] = d.verified_3sto;
  j["verified_sto"] = d.verified_sto;
  j["elapsed_ms"] = d.elapsed_ms;
  j["certification"] = d.certification;
  j["certified_non_3sto"] = d.certified_non_3sto;
  j["nodes_explored"] = d.nodes_explored;
  return j.dump(2);
}

}  // namespace wordrep
