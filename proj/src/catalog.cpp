#include "wordrep/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wordrep {

namespace {

Graph build_path(int n) {
  if (n < 1) throw std::invalid_argument("path: need n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph build_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return Graph(n, std::move(e));
}

Graph build_star(int k) {
  if (k < 1) throw std::invalid_argument("star: need k >= 1 leaves");
  std::vector<Edge> e;
  for (int i = 1; i <= k; ++i) e.push_back({0, i});
  return Graph(k + 1, std::move(e));
}

Graph build_wheel(int k) {
  if (k < 3) throw std::invalid_argument("wheel: need rim size k >= 3");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < k; ++i) e.push_back({i, i + 1});
  e.push_back({0, k - 1});
  for (int i = 0; i < k; ++i) e.push_back({i, k});
  return Graph(k + 1, std::move(e));
}

Graph build_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: need n >= 1");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return Graph(n, std::move(e));
}

Graph build_petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) e.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
  for (int i = 0; i < 5; ++i) e.push_back({i, i + 5});
  for (int i = 0; i < 5; ++i) {
    int a = 5 + i, b = 5 + (i + 2) % 5;
    e.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(10, std::move(e));
}

Graph build_tutte() {
  static const std::vector<Edge> kEdges = {
      {0, 1},   {0, 2},   {0, 3},   {1, 4},   {1, 26},  {2, 10},  {2, 11},  {3, 18},
      {3, 19},  {4, 5},   {4, 33},  {5, 6},   {5, 29},  {6, 7},   {6, 27},  {7, 8},
      {7, 14},  {8, 9},   {8, 38},  {9, 10},  {9, 37},  {10, 39}, {11, 12}, {11, 39},
      {12, 13}, {12, 35}, {13, 14}, {13, 15}, {14, 34}, {15, 16}, {15, 22}, {16, 17},
      {16, 44}, {17, 18}, {17, 43}, {18, 45}, {19, 20}, {19, 45}, {20, 21}, {20, 41},
      {21, 22}, {21, 23}, {22, 40}, {23, 24}, {23, 27}, {24, 25}, {24, 32}, {25, 26},
      {25, 31}, {26, 33}, {27, 28}, {28, 29}, {28, 32}, {29, 30}, {30, 31}, {30, 33},
      {31, 32}, {34, 35}, {34, 38}, {35, 36}, {36, 37}, {36, 39}, {37, 38}, {40, 41},
      {40, 44}, {41, 42}, {42, 43}, {42, 45}, {43, 44}};
  return Graph(46, kEdges);
}

Graph build_herschel() {
  static const std::vector<Edge> kEdges = {
      {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},  {1, 5},  {2, 6},  {2, 7},  {3, 8},
      {3, 9}, {4, 6}, {4, 8}, {5, 7}, {5, 9},  {6, 10}, {7, 10}, {8, 10}, {9, 10}};
  return Graph(11, kEdges);
}

Graph build_goldner_harary() {
  // Triangular bipyramid: apexes 0, 1; equator 2, 3, 4. A vertex is stacked
  // on each of the six triangular faces.
  std::vector<Edge> e = {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
                         {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  static const int kFaces[6][3] = {{0, 2, 3}, {0, 3, 4}, {0, 2, 4},
                                   {1, 2, 3}, {1, 3, 4}, {1, 2, 4}};
  for (int f = 0; f < 6; ++f) {
    int s = 5 + f;
    for (int v : kFaces[f]) e.push_back({v, s});
  }
  return Graph(11, std::move(e));
}

// r x c honeycomb on the brick-wall grid: vertices (x, y), horizontal edges
// everywhere, vertical edges where x + y is even. Cell (row, col) is anchored
// at x0 = 2*col + (row & 1), spanning y = row..row+1, x = x0..x0+2. One
// degree-2 corner (the highest vertex id) is removed and ids are compacted.
Graph build_hex_lattice(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("hex_lattice: need rows, cols >= 1");
  std::map<std::pair<int, int>, int> id;
  std::vector<Edge> edges;
  auto vertex = [&](int x, int y) {
    auto [it, fresh] = id.insert({{x, y}, static_cast<int>(id.size())});
    (void)fresh;
    return it->second;
  };
  auto add_edge = [&](int a, int b) {
    Edge e{std::min(a, b), std::max(a, b)};
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int x0 = 2 * c + (r & 1);
      int walk[6][2] = {{x0, r},     {x0 + 1, r},     {x0 + 2, r},
                        {x0 + 2, r + 1}, {x0 + 1, r + 1}, {x0, r + 1}};
      int ids[6];
      for (int i = 0; i < 6; ++i) ids[i] = vertex(walk[i][0], walk[i][1]);
      for (int i = 0; i < 6; ++i) add_edge(ids[i], ids[(i + 1) % 6]);
    }
  }
  Graph full(static_cast<int>(id.size()), edges);
  const auto deg = full.degrees();
  int drop = -1;
  for (int v = 0; v < full.vertex_count(); ++v) {
    if (deg[static_cast<size_t>(v)] == 2) drop = v;
  }
  if (drop < 0) return full;
  std::vector<Edge> trimmed;
  for (const auto& [u, v] : full.edges()) {
    if (u == drop || v == drop) continue;
    trimmed.push_back({u > drop ? u - 1 : u, v > drop ? v - 1 : v});
  }
  return Graph(full.vertex_count() - 1, std::move(trimmed));
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> kEntries = {
      {"path", 1, "n >= 1 vertices"},
      {"cycle", 1, "n >= 3 vertices"},
      {"star", 1, "k >= 1 leaves"},
      {"wheel", 1, "rim size k >= 3 (k+1 vertices)"},
      {"complete", 1, "n >= 1 vertices"},
      {"petersen", 0, ""},
      {"tutte", 0, ""},
      {"herschel", 0, ""},
      {"goldner_harary", 0, ""},
      {"hex_lattice", 2, "rows >= 1, cols >= 1 hexagonal cells"},
  };
  return kEntries;
}

Graph catalog_build(const std::string& name, std::span<const int> params) {
  const CatalogEntry* entry = nullptr;
  for (const auto& e : catalog_entries()) {
    if (e.name == name) entry = &e;
  }
  if (entry == nullptr) throw std::invalid_argument("unknown catalog graph: " + name);
  if (static_cast<int>(params.size()) != entry->param_count) {
    throw std::invalid_argument(name + ": expected " + std::to_string(entry->param_count) +
                                " parameter(s), got " + std::to_string(params.size()));
  }
  if (name == "path") return build_path(params[0]);
  if (name == "cycle") return build_cycle(params[0]);
  if (name == "star") return build_star(params[0]);
  if (name == "wheel") return build_wheel(params[0]);
  if (name == "complete") return build_complete(params[0]);
  if (name == "petersen") return build_petersen();
  if (name == "tutte") return build_tutte();
  if (name == "herschel") return build_herschel();
  if (name == "goldner_harary") return build_goldner_harary();
  return build_hex_lattice(params[0], params[1]);
}

}  // namespace wordrep
