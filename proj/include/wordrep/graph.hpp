#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace wordrep {

// Index of an edge in a Graph's stored edge list. Edge i of the base graph
// is vertex i of its line graph and spin variable x_i of the derived
// optimization problem, so the stored order is part of the value.
using EdgeIndex = int;

// Unordered pair of endpoints, stored with first < second.
using Edge = std::pair<int, int>;

// Finite simple undirected graph: a vertex count and an ordered edge list.
// No loops, no duplicate edges, endpoints in [0, vertex_count).
class Graph {
 public:
  Graph() = default;
  // Endpoints may be given in either order; each pair is normalized to
  // (min, max). Throws std::invalid_argument on loops, duplicates, or
  // out-of-range endpoints.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex i) const { return edges_[static_cast<size_t>(i)]; }

  std::optional<EdgeIndex> edge_index(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_index(u, v).has_value(); }

  std::vector<int> degrees() const;
  int max_degree() const;
  std::vector<std::vector<int>> adjacency_lists() const;
  std::vector<std::vector<std::uint8_t>> adjacency_matrix() const;

  // Equality includes the edge order.
  bool operator==(const Graph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Dense integer matrix, row major.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}

  int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  bool operator==(const Matrix&) const = default;
};

// Vertex-edge incidence matrix, vertex_count x edge_count; column j has a 1
// at each endpoint of edge j.
Matrix incidence_matrix(const Graph& g);

// Adjacency matrix of the line graph, computed as M^T M - 2I from the
// incidence matrix M. Entry (i, j) is 1 iff edges i and j share an endpoint.
Matrix edge_adjacency(const Graph& g);

// Line graph: vertex i of the result is edge i of g; two vertices are
// adjacent iff the corresponding edges share an endpoint. The result's own
// edge list is ordered lexicographically by (min index, max index).
Graph line_graph(const Graph& g);

// All triangles {i, j, k} with i < j < k, listed lexicographically.
std::vector<std::array<int, 3>> triangles(const Graph& g);

// True iff the two graphs have the same vertex count and the same set of
// edges, ignoring edge order.
bool same_edge_set(const Graph& a, const Graph& b);

}  // namespace wordrep
