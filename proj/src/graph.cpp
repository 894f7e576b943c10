#include "wordrep/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace wordrep {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 0) {
    throw std::invalid_argument("graph: negative vertex count");
  }
  std::set<Edge> seen;
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u == v) {
      throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
    }
    if (u < 0 || v >= vertex_count_) {
      throw std::invalid_argument("graph: edge (" + std::to_string(u) + ", " +
                                  std::to_string(v) + ") out of range");
    }
    if (!seen.insert({u, v}).second) {
      throw std::invalid_argument("graph: duplicate edge (" + std::to_string(u) +
                                  ", " + std::to_string(v) + ")");
    }
  }
}

std::optional<EdgeIndex> Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].first == u && edges_[i].second == v) {
      return static_cast<EdgeIndex>(i);
    }
  }
  return std::nullopt;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<size_t>(vertex_count_), 0);
  for (const auto& [u, v] : edges_) {
    ++d[static_cast<size_t>(u)];
    ++d[static_cast<size_t>(v)];
  }
  return d;
}

int Graph::max_degree() const {
  int best = 0;
  for (int d : degrees()) best = std::max(best, d);
  return best;
}

std::vector<std::vector<int>> Graph::adjacency_lists() const {
  std::vector<std::vector<int>> adj(static_cast<size_t>(vertex_count_));
  for (const auto& [u, v] : edges_) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<std::vector<std::uint8_t>> Graph::adjacency_matrix() const {
  std::vector<std::vector<std::uint8_t>> m(
      static_cast<size_t>(vertex_count_),
      std::vector<std::uint8_t>(static_cast<size_t>(vertex_count_), 0));
  for (const auto& [u, v] : edges_) {
    m[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
    m[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
  }
  return m;
}

Matrix incidence_matrix(const Graph& g) {
  Matrix m(g.vertex_count(), g.edge_count());
  for (int j = 0; j < g.edge_count(); ++j) {
    m.at(g.edge(j).first, j) = 1;
    m.at(g.edge(j).second, j) = 1;
  }
  return m;
}

Matrix edge_adjacency(const Graph& g) {
  const Matrix m = incidence_matrix(g);
  Matrix q(g.edge_count(), g.edge_count());
  for (int i = 0; i < q.rows; ++i) {
    for (int j = 0; j < q.cols; ++j) {
      int s = 0;
      for (int v = 0; v < m.rows; ++v) s += m.at(v, i) * m.at(v, j);
      q.at(i, j) = s - (i == j ? 2 : 0);
    }
  }
  return q;
}

Graph line_graph(const Graph& g) {
  const int m = g.edge_count();
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const auto& [a, b] = g.edge(i);
      const auto& [c, d] = g.edge(j);
      if (a == c || a == d || b == c || b == d) edges.push_back({i, j});
    }
  }
  return Graph(m, std::move(edges));
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
  const auto adj = g.adjacency_matrix();
  const int n = g.vertex_count();
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!adj[static_cast<size_t>(i)][static_cast<size_t>(j)]) continue;
      for (int k = j + 1; k < n; ++k) {
        if (adj[static_cast<size_t>(i)][static_cast<size_t>(k)] &&
            adj[static_cast<size_t>(j)][static_cast<size_t>(k)]) {
          out.push_back({i, j, k});
        }
      }
    }
  }
  return out;
}

bool same_edge_set(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  std::set<Edge> ea(a.edges().begin(), a.edges().end());
  std::set<Edge> eb(b.edges().begin(), b.edges().end());
  return ea == eb;
}

}  // namespace wordrep
