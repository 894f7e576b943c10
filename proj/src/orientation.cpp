#include "wordrep/orientation.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace wordrep {

namespace {

struct Digraph {
  int n = 0;
  std::vector<std::vector<std::uint8_t>> arc;  // arc[u][v] = 1 iff u -> v
  std::vector<std::vector<int>> out;           // sorted heads

  explicit Digraph(const Orientation& o) : n(o.base().vertex_count()) {
    arc.assign(static_cast<size_t>(n), std::vector<std::uint8_t>(static_cast<size_t>(n), 0));
    out.assign(static_cast<size_t>(n), {});
    for (auto [a, b] : o.arcs()) {
      arc[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
      out[static_cast<size_t>(a)].push_back(b);
    }
    for (auto& row : out) std::sort(row.begin(), row.end());
  }
};

std::optional<std::vector<int>> topo_order_of(const Digraph& d) {
  std::vector<int> indeg(static_cast<size_t>(d.n), 0);
  for (int u = 0; u < d.n; ++u) {
    for (int v : d.out[static_cast<size_t>(u)]) ++indeg[static_cast<size_t>(v)];
  }
  std::vector<int> order;
  std::vector<int> ready;
  for (int v = d.n - 1; v >= 0; --v) {
    if (indeg[static_cast<size_t>(v)] == 0) ready.push_back(v);
  }
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<int>());
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int w : d.out[static_cast<size_t>(v)]) {
      if (--indeg[static_cast<size_t>(w)] == 0) ready.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != d.n) return std::nullopt;
  return order;
}

void require_complete(const Orientation& o, const char* who) {
  if (!o.is_complete()) {
    throw std::invalid_argument(std::string(who) + ": orientation has undirected edges");
  }
}

// Bitset reachability: reach[v] = vertices reachable from v, v included.
std::vector<std::vector<std::uint64_t>> reach_sets(const Digraph& d,
                                                   const std::vector<int>& topo) {
  const size_t words = (static_cast<size_t>(d.n) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reach(static_cast<size_t>(d.n),
                                                std::vector<std::uint64_t>(words, 0));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    auto& rv = reach[static_cast<size_t>(v)];
    rv[static_cast<size_t>(v) / 64] |= 1ull << (static_cast<size_t>(v) % 64);
    for (int w : d.out[static_cast<size_t>(v)]) {
      const auto& rw = reach[static_cast<size_t>(w)];
      for (size_t i = 0; i < words; ++i) rv[i] |= rw[i];
    }
  }
  return reach;
}

bool intersects(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

// First missing non-consecutive, non-closing pair along the path, scanned
// lexicographically by (i, j); nullopt when the path is fully chorded.
std::optional<std::pair<int, int>> first_missing_chord(const Digraph& d,
                                                       const std::vector<int>& path) {
  const int k = static_cast<int>(path.size()) - 1;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 2; j <= k; ++j) {
      if (i == 0 && j == k) continue;
      if (!d.arc[static_cast<size_t>(path[static_cast<size_t>(i)])]
                [static_cast<size_t>(path[static_cast<size_t>(j)])]) {
        return std::make_pair(path[static_cast<size_t>(i)], path[static_cast<size_t>(j)]);
      }
    }
  }
  return std::nullopt;
}

struct ShortcutSearch {
  const Digraph& d;
  int max_len;
  std::vector<std::vector<std::uint64_t>> reach;
  std::vector<std::uint64_t> targets;  // out-neighbors of the current source
  std::vector<int> path;
  std::optional<ShortcutWitness> found;

  ShortcutSearch(const Digraph& dg, int ml, const std::vector<int>& topo)
      : d(dg), max_len(ml), reach(reach_sets(dg, topo)) {}

  bool extend() {
    const int v = path.back();
    for (int w : d.out[static_cast<size_t>(v)]) {
      path.push_back(w);
      const int arcs = static_cast<int>(path.size()) - 1;
      if (arcs >= 3 && d.arc[static_cast<size_t>(path[0])][static_cast<size_t>(w)]) {
        if (auto miss = first_missing_chord(d, path)) {
          found = ShortcutWitness{path, *miss};
          return true;
        }
      }
      if (arcs < max_len && intersects(reach[static_cast<size_t>(w)], targets)) {
        if (extend()) return true;
      }
      path.pop_back();
    }
    return false;
  }

  std::optional<ShortcutWitness> run(const std::vector<int>& topo) {
    const size_t words = (static_cast<size_t>(d.n) + 63) / 64;
    for (int u : topo) {
      if (d.out[static_cast<size_t>(u)].size() < 2) continue;  // needs path arc + closing arc
      targets.assign(words, 0);
      for (int t : d.out[static_cast<size_t>(u)]) {
        targets[static_cast<size_t>(t) / 64] |= 1ull << (static_cast<size_t>(t) % 64);
      }
      path = {u};
      if (extend()) return found;
    }
    return std::nullopt;
  }
};

}  // namespace

Orientation::Orientation(Graph base, std::vector<EdgeDirection> dirs)
    : base_(std::move(base)), dirs_(std::move(dirs)) {
  if (static_cast<int>(dirs_.size()) != base_.edge_count()) {
    throw std::invalid_argument("orientation: one direction per edge required");
  }
}

Orientation Orientation::all_undirected(Graph base) {
  const size_t m = static_cast<size_t>(base.edge_count());
  return Orientation(std::move(base), std::vector<EdgeDirection>(m, EdgeDirection::Undirected));
}

bool Orientation::is_complete() const {
  return std::none_of(dirs_.begin(), dirs_.end(),
                      [](EdgeDirection d) { return d == EdgeDirection::Undirected; });
}

int Orientation::directed_count() const {
  return static_cast<int>(std::count_if(dirs_.begin(), dirs_.end(), [](EdgeDirection d) {
    return d != EdgeDirection::Undirected;
  }));
}

std::vector<std::pair<int, int>> Orientation::arcs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < base_.edge_count(); ++i) {
    const auto& [u, v] = base_.edge(i);
    switch (dirs_[static_cast<size_t>(i)]) {
      case EdgeDirection::Forward: out.push_back({u, v}); break;
      case EdgeDirection::Backward: out.push_back({v, u}); break;
      case EdgeDirection::Undirected: break;
    }
  }
  return out;
}

std::string Orientation::to_string() const {
  std::string s;
  s.reserve(dirs_.size());
  for (EdgeDirection d : dirs_) {
    s += d == EdgeDirection::Forward ? 'F' : d == EdgeDirection::Backward ? 'B' : 'U';
  }
  return s;
}

Orientation Orientation::from_string(Graph base, std::string_view s) {
  if (static_cast<int>(s.size()) != base.edge_count()) {
    throw std::invalid_argument("orientation string: length must equal edge count");
  }
  std::vector<EdgeDirection> dirs;
  dirs.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case 'F': dirs.push_back(EdgeDirection::Forward); break;
      case 'B': dirs.push_back(EdgeDirection::Backward); break;
      case 'U': dirs.push_back(EdgeDirection::Undirected); break;
      default: throw std::invalid_argument(std::string("orientation string: bad char '") + c + "'");
    }
  }
  return Orientation(std::move(base), std::move(dirs));
}

std::string Orientation::to_dot(const std::vector<std::string>& labels) const {
  std::ostringstream out;
  out << "digraph g {\n";
  for (int v = 0; v < base_.vertex_count(); ++v) {
    out << "  " << v;
    if (!labels.empty()) out << " [label=\"" << labels[static_cast<size_t>(v)] << "\"]";
    out << ";\n";
  }
  for (int i = 0; i < base_.edge_count(); ++i) {
    const auto& [u, v] = base_.edge(i);
    switch (dirs_[static_cast<size_t>(i)]) {
      case EdgeDirection::Forward: out << "  " << u << " -> " << v << ";\n"; break;
      case EdgeDirection::Backward: out << "  " << v << " -> " << u << ";\n"; break;
      case EdgeDirection::Undirected: out << "  " << u << " -> " << v << " [dir=none];\n"; break;
    }
  }
  out << "}\n";
  return out.str();
}

bool witness_valid(const Orientation& o, const ShortcutWitness& w) {
  if (!o.is_complete()) return false;
  const Digraph d(o);
  const auto& p = w.path;
  const int k = static_cast<int>(p.size()) - 1;
  if (k < 3) return false;
  for (int v : p) {
    if (v < 0 || v >= d.n) return false;
  }
  std::vector<int> sorted(p);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (int i = 0; i < k; ++i) {
    if (!d.arc[static_cast<size_t>(p[static_cast<size_t>(i)])]
              [static_cast<size_t>(p[static_cast<size_t>(i + 1)])]) {
      return false;
    }
  }
  if (!d.arc[static_cast<size_t>(p[0])][static_cast<size_t>(p[static_cast<size_t>(k)])]) {
    return false;
  }
  // locate the missing pair on the path
  int i = -1, j = -1;
  for (int t = 0; t <= k; ++t) {
    if (p[static_cast<size_t>(t)] == w.missing.first) i = t;
    if (p[static_cast<size_t>(t)] == w.missing.second) j = t;
  }
  if (i < 0 || j < 0 || i >= j || j - i < 2 || (i == 0 && j == k)) return false;
  return !d.arc[static_cast<size_t>(w.missing.first)][static_cast<size_t>(w.missing.second)];
}

bool is_acyclic(const Orientation& o) {
  require_complete(o, "is_acyclic");
  return topo_order_of(Digraph(o)).has_value();
}

std::optional<std::vector<int>> topological_order(const Orientation& o) {
  require_complete(o, "topological_order");
  return topo_order_of(Digraph(o));
}

std::optional<ShortcutWitness> find_shortcut(const Orientation& o, int max_len) {
  require_complete(o, "find_shortcut");
  if (max_len < 3) throw std::invalid_argument("find_shortcut: max_len must be >= 3");
  const Digraph d(o);
  auto topo = topo_order_of(d);
  if (!topo.has_value()) throw std::invalid_argument("find_shortcut: orientation is cyclic");
  ShortcutSearch search(d, max_len, *topo);
  return search.run(*topo);
}

std::optional<ShortcutWitness> find_shortcut(const Orientation& o) {
  const int n = o.base().vertex_count();
  return find_shortcut(o, std::max(3, n - 1));
}

bool is_semi_transitive(const Orientation& o) {
  require_complete(o, "is_semi_transitive");
  if (!is_acyclic(o)) return false;
  return !find_shortcut(o).has_value();
}

bool is_3_semi_transitive(const Orientation& o) {
  require_complete(o, "is_3_semi_transitive");
  if (!is_acyclic(o)) return false;
  return !find_shortcut(o, 3).has_value();
}

std::optional<Orientation> exhaustive_orientation_search(const Graph& g, SearchMode mode,
                                                         int max_edges) {
  const int m = g.edge_count();
  if (m > max_edges) {
    throw std::invalid_argument("exhaustive_orientation_search: " + std::to_string(m) +
                                " edges exceeds the bound " + std::to_string(max_edges));
  }
  const int n = g.vertex_count();
  std::vector<std::vector<int>> out(static_cast<size_t>(n));
  Orientation o = Orientation::all_undirected(g);

  // Is `to` reachable from `from` along current arcs?
  auto reaches = [&](int from, int to) {
    std::vector<int> stack = {from};
    std::vector<std::uint8_t> seen(static_cast<size_t>(n), 0);
    seen[static_cast<size_t>(from)] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      for (int w : out[static_cast<size_t>(v)]) {
        if (!seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    return false;
  };

  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == m) {
      return mode == SearchMode::SemiTransitive ? is_semi_transitive(o)
                                                : is_3_semi_transitive(o);
    }
    const auto& [u, v] = g.edge(i);
    const int tries = i == 0 ? 1 : 2;  // edge 0 fixed Forward
    for (int t = 0; t < tries; ++t) {
      const bool forward = t == 0;
      const int a = forward ? u : v;
      const int b = forward ? v : u;
      if (!reaches(b, a)) {  // adding a -> b keeps the partial digraph acyclic
        out[static_cast<size_t>(a)].push_back(b);
        o.set_direction(i, forward ? EdgeDirection::Forward : EdgeDirection::Backward);
        if (rec(i + 1)) return true;
        out[static_cast<size_t>(a)].pop_back();
        o.set_direction(i, EdgeDirection::Undirected);
      }
    }
    return false;
  };
  if (m == 0) return o;  // trivially complete and shortcut-free
  if (rec(0)) return o;
  return std::nullopt;
}

}  // namespace wordrep
