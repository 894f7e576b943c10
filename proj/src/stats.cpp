#include "wordrep/stats.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace wordrep {

namespace {

bool bipartite(const Graph& g) {
  const auto adj = g.adjacency_lists();
  std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<int> stack;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (color[static_cast<size_t>(s)] != -1) continue;
    color[static_cast<size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[static_cast<size_t>(v)]) {
        if (color[static_cast<size_t>(w)] == -1) {
          color[static_cast<size_t>(w)] = color[static_cast<size_t>(v)] ^ 1;
          stack.push_back(w);
        } else if (color[static_cast<size_t>(w)] == color[static_cast<size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Greedy clique grown from each vertex in descending degree order.
int greedy_clique(const Graph& g) {
  const auto adj = g.adjacency_matrix();
  const auto deg = g.degrees();
  std::vector<int> order(static_cast<size_t>(g.vertex_count()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return deg[static_cast<size_t>(a)] != deg[static_cast<size_t>(b)]
               ? deg[static_cast<size_t>(a)] > deg[static_cast<size_t>(b)]
               : a < b;
  });
  int best = g.vertex_count() > 0 ? 1 : 0;
  for (int seed : order) {
    std::vector<int> clique = {seed};
    for (int v : order) {
      if (v == seed) continue;
      bool joins = true;
      for (int c : clique) {
        if (!adj[static_cast<size_t>(v)][static_cast<size_t>(c)]) {
          joins = false;
          break;
        }
      }
      if (joins) clique.push_back(v);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

// Largest-degree-first greedy coloring; returns the number of colors used.
int greedy_coloring(const Graph& g) {
  const auto adj = g.adjacency_lists();
  const auto deg = g.degrees();
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return deg[static_cast<size_t>(a)] != deg[static_cast<size_t>(b)]
               ? deg[static_cast<size_t>(a)] > deg[static_cast<size_t>(b)]
               : a < b;
  });
  std::vector<int> color(static_cast<size_t>(n), -1);
  int used = 0;
  for (int v : order) {
    std::vector<bool> taken(static_cast<size_t>(used + 1), false);
    for (int w : adj[static_cast<size_t>(v)]) {
      int c = color[static_cast<size_t>(w)];
      if (c >= 0 && c <= used) taken[static_cast<size_t>(c)] = true;
    }
    int c = 0;
    while (taken[static_cast<size_t>(c)]) ++c;
    color[static_cast<size_t>(v)] = c;
    used = std::max(used, c + 1);
  }
  return n == 0 ? 0 : used;
}

// Can g be properly colored with k colors? Saturation-guided backtracking;
// returns nullopt when the node budget runs out.
std::optional<bool> colorable(const Graph& g, int k, long long& budget) {
  const int n = g.vertex_count();
  const auto adj = g.adjacency_lists();
  std::vector<int> color(static_cast<size_t>(n), -1);
  std::vector<int> used_count(static_cast<size_t>(n), 0);  // distinct neighbor colors
  std::vector<std::vector<int>> neighbor_colors(
      static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(k), 0));

  // True when fully colored, false on exhaustion, nullopt when out of budget.
  std::function<std::optional<bool>(int)> rec = [&](int colored) -> std::optional<bool> {
    if (--budget < 0) return std::nullopt;
    if (colored == n) return true;
    // most saturated uncolored vertex, ties by degree then index
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<size_t>(v)] != -1) continue;
      if (best == -1 || used_count[static_cast<size_t>(v)] > used_count[static_cast<size_t>(best)] ||
          (used_count[static_cast<size_t>(v)] == used_count[static_cast<size_t>(best)] &&
           adj[static_cast<size_t>(v)].size() > adj[static_cast<size_t>(best)].size())) {
        best = v;
      }
    }
    int cap = k;
    if (colored == 0) cap = 1;  // first vertex: color symmetry
    for (int c = 0; c < cap; ++c) {
      if (neighbor_colors[static_cast<size_t>(best)][static_cast<size_t>(c)] > 0) continue;
      color[static_cast<size_t>(best)] = c;
      for (int w : adj[static_cast<size_t>(best)]) {
        if (++neighbor_colors[static_cast<size_t>(w)][static_cast<size_t>(c)] == 1) {
          ++used_count[static_cast<size_t>(w)];
        }
      }
      auto sub = rec(colored + 1);
      for (int w : adj[static_cast<size_t>(best)]) {
        if (--neighbor_colors[static_cast<size_t>(w)][static_cast<size_t>(c)] == 0) {
          --used_count[static_cast<size_t>(w)];
        }
      }
      color[static_cast<size_t>(best)] = -1;
      if (!sub.has_value() || *sub) return sub;
    }
    return false;
  };
  return rec(0);
}

}  // namespace

std::string GraphStats::chromatic_info() const {
  if (chromatic_number.has_value()) return std::to_string(*chromatic_number);
  return "[" + std::to_string(chromatic_lower) + "," + std::to_string(chromatic_upper) + "]";
}

GraphStats graph_stats(const Graph& g, long long node_budget) {
  GraphStats s;
  s.nodes = g.vertex_count();
  s.edges = g.edge_count();
  s.max_degree = g.max_degree();
  s.two_colorable = bipartite(g);
  if (g.vertex_count() == 0) {
    s.chromatic_number = 0;
    return s;
  }
  if (g.edge_count() == 0) {
    s.chromatic_number = 1;
    s.chromatic_lower = s.chromatic_upper = 1;
    return s;
  }
  if (s.two_colorable) {
    s.chromatic_number = 2;
    s.chromatic_lower = s.chromatic_upper = 2;
    return s;
  }
  s.chromatic_lower = std::max(3, greedy_clique(g));
  s.chromatic_upper = greedy_coloring(g);
  long long budget = node_budget;
  for (int k = s.chromatic_lower; k < s.chromatic_upper; ++k) {
    auto ok = colorable(g, k, budget);
    if (!ok.has_value()) return s;  // out of budget: keep the bracket
    if (*ok) {
      s.chromatic_upper = k;
      break;
    }
    s.chromatic_lower = k + 1;
  }
  s.chromatic_number = s.chromatic_upper;
  s.chromatic_lower = s.chromatic_upper = *s.chromatic_number;
  return s;
}

}  // namespace wordrep
