#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "wordrep/catalog.hpp"
#include "wordrep/edgelist_io.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/stats.hpp"

using namespace wordrep;

namespace {

Graph random_graph(std::mt19937& rng, int max_vertices, int max_edges) {
  std::uniform_int_distribution<int> nd(2, max_vertices);
  const int n = nd(rng);
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  std::shuffle(all.begin(), all.end(), rng);
  std::uniform_int_distribution<int> md(1, std::min<int>(max_edges, static_cast<int>(all.size())));
  all.resize(static_cast<size_t>(md(rng)));
  return Graph(n, all);
}

}  // namespace

TEST_CASE("graph constructor normalizes and validates") {
  Graph g(3, {{2, 0}, {1, 2}});
  CHECK(g.edge(0) == Edge{0, 2});
  CHECK(g.edge(1) == Edge{1, 2});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);

  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(2, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("edge lookup and degrees") {
  Graph g = catalog_build("path", std::vector<int>{4});
  CHECK(g.edge_index(1, 0).has_value());
  CHECK(*g.edge_index(2, 1) == 1);
  CHECK_FALSE(g.edge_index(0, 2).has_value());
  CHECK(g.has_edge(2, 3));
  CHECK(g.degrees() == std::vector<int>{1, 2, 2, 1});
  CHECK(g.max_degree() == 2);

  auto adj = g.adjacency_lists();
  CHECK(adj[1] == std::vector<int>{0, 2});
  auto mat = g.adjacency_matrix();
  CHECK(mat[0][1] == 1);
  CHECK(mat[0][2] == 0);
  CHECK(mat[0][0] == 0);
}

TEST_CASE("incidence matrix columns mark the two endpoints") {
  Graph g = catalog_build("complete", std::vector<int>{3});
  Matrix m = incidence_matrix(g);
  CHECK(m.rows == 3);
  CHECK(m.cols == 3);
  for (int j = 0; j < m.cols; ++j) {
    int ones = 0;
    for (int i = 0; i < m.rows; ++i) {
      CHECK((m.at(i, j) == 0 || m.at(i, j) == 1));
      ones += m.at(i, j);
    }
    CHECK(ones == 2);
    CHECK(m.at(g.edge(j).first, j) == 1);
    CHECK(m.at(g.edge(j).second, j) == 1);
  }
}

TEST_CASE("edge adjacency equals shared-endpoint relation and M^T M - 2I") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 60; ++iter) {
    Graph g = random_graph(rng, 8, 40);
    Matrix q = edge_adjacency(g);
    const int m = g.edge_count();
    REQUIRE(q.rows == m);
    REQUIRE(q.cols == m);

    Matrix inc = incidence_matrix(g);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        int dot = 0;
        for (int v = 0; v < inc.rows; ++v) dot += inc.at(v, i) * inc.at(v, j);
        if (i == j) dot -= 2;
        CHECK(q.at(i, j) == dot);

        auto [a, b] = g.edge(i);
        auto [c, d] = g.edge(j);
        const bool share = i != j && (a == c || a == d || b == c || b == d);
        CHECK(q.at(i, j) == (share ? 1 : 0));
      }
      CHECK(q.at(i, i) == 0);
    }
  }
}

TEST_CASE("line graph matches edge adjacency and the degree-sum count") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    Graph g = random_graph(rng, 8, 40);
    Graph lg = line_graph(g);
    Matrix q = edge_adjacency(g);
    CHECK(lg.vertex_count() == g.edge_count());

    long long expected = 0;
    for (int d : g.degrees()) expected += static_cast<long long>(d) * (d - 1) / 2;
    CHECK(lg.edge_count() == expected);

    for (const auto& [i, j] : lg.edges()) CHECK(q.at(i, j) == 1);
    auto mat = lg.adjacency_matrix();
    for (int i = 0; i < q.rows; ++i) {
      for (int j = 0; j < q.cols; ++j) CHECK(static_cast<int>(mat[i][j]) == q.at(i, j));
    }
    CHECK(std::is_sorted(lg.edges().begin(), lg.edges().end()));
  }
}

TEST_CASE("line graph of the complete graph on four vertices") {
  // Vertices of the result are the six edges of the base; the only
  // non-adjacent pairs are the three disjoint edge pairs.
  Graph g = catalog_build("complete", std::vector<int>{4});
  Graph lg = line_graph(g);
  CHECK(lg.vertex_count() == 6);
  CHECK(lg.edge_count() == 12);
  CHECK(lg.degrees() == std::vector<int>(6, 4));
  // stored base order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
  CHECK_FALSE(lg.has_edge(0, 5));
  CHECK_FALSE(lg.has_edge(1, 4));
  CHECK_FALSE(lg.has_edge(2, 3));
  CHECK(triangles(lg).size() == 8);
}

TEST_CASE("triangle listing") {
  Graph k4 = catalog_build("complete", std::vector<int>{4});
  auto t = triangles(k4);
  REQUIRE(t.size() == 4);
  CHECK(t[0] == std::array<int, 3>{0, 1, 2});
  CHECK(t[3] == std::array<int, 3>{1, 2, 3});
  CHECK(std::is_sorted(t.begin(), t.end()));

  Graph c4 = catalog_build("cycle", std::vector<int>{4});
  CHECK(triangles(c4).empty());
}

TEST_CASE("same edge set ignores order only") {
  Graph a(3, {{0, 1}, {1, 2}});
  Graph b(3, {{1, 2}, {0, 1}});
  Graph c(3, {{0, 1}, {0, 2}});
  Graph d(4, {{0, 1}, {1, 2}});
  CHECK(same_edge_set(a, b));
  CHECK_FALSE(same_edge_set(a, c));
  CHECK_FALSE(same_edge_set(a, d));
  CHECK_FALSE(a == b);
  CHECK(a == Graph(3, {{0, 1}, {1, 2}}));
}

TEST_CASE("catalog constructions have the advertised shapes") {
  CHECK(catalog_build("path", std::vector<int>{6}).edge_count() == 5);
  CHECK(catalog_build("cycle", std::vector<int>{6}).edge_count() == 6);
  CHECK(catalog_build("star", std::vector<int>{5}).degrees()[0] == 5);

  Graph w4 = catalog_build("wheel", std::vector<int>{4});
  CHECK(w4.vertex_count() == 5);
  CHECK(w4.edge_count() == 8);
  CHECK(w4.degrees()[4] == 4);  // hub is the last vertex

  Graph w5 = catalog_build("wheel", std::vector<int>{5});
  CHECK(w5.vertex_count() == 6);
  CHECK(w5.edge_count() == 10);

  Graph pet = catalog_build("petersen", {});
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  CHECK(pet.max_degree() == 3);
  CHECK(triangles(pet).empty());

  Graph tutte = catalog_build("tutte", {});
  CHECK(tutte.vertex_count() == 46);
  CHECK(tutte.edge_count() == 69);
  CHECK(tutte.degrees() == std::vector<int>(46, 3));
  CHECK(triangles(tutte).empty());

  Graph her = catalog_build("herschel", {});
  CHECK(her.vertex_count() == 11);
  CHECK(her.edge_count() == 18);
  CHECK(her.max_degree() == 4);
  CHECK(graph_stats(her).two_colorable);

  Graph gh = catalog_build("goldner_harary", {});
  CHECK(gh.vertex_count() == 11);
  CHECK(gh.edge_count() == 27);
  CHECK(gh.max_degree() == 8);

  Graph hex = catalog_build("hex_lattice", std::vector<int>{2, 3});
  CHECK(hex.vertex_count() == 21);
  CHECK(hex.edge_count() == 25);
  CHECK(hex.max_degree() == 3);
  CHECK(graph_stats(hex).two_colorable);

  CHECK_THROWS_AS(catalog_build("nonsense", {}), std::invalid_argument);
  CHECK_THROWS_AS(catalog_build("wheel", std::vector<int>{2}), std::invalid_argument);
  CHECK_THROWS_AS(catalog_build("path", std::vector<int>{0}), std::invalid_argument);
  CHECK_THROWS_AS(catalog_build("cycle", std::vector<int>{2}), std::invalid_argument);
  CHECK_THROWS_AS(catalog_build("petersen", std::vector<int>{1}), std::invalid_argument);
}

TEST_CASE("edge list parsing accepts comments and validates") {
  Graph g = parse_edge_list("# triangle\n\n3 3\n0 1\n# middle comment\n1 2\n0 2\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);

  CHECK_THROWS_AS(parse_edge_list(""), std::runtime_error);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), std::runtime_error);            // missing edge
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), std::runtime_error);       // extra edge
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), std::runtime_error);            // loop
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), std::runtime_error);       // duplicate
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), std::runtime_error);            // out of range
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), std::runtime_error);            // not a number
}

TEST_CASE("edge list round trip preserves the stored order") {
  std::mt19937 rng(99);
  for (int iter = 0; iter < 30; ++iter) {
    Graph g = random_graph(rng, 7, 15);
    Graph back = parse_edge_list(serialize_edge_list(g));
    CHECK(back == g);
  }
  CHECK(serialize_edge_list(Graph(2, {{0, 1}})) == "2 1\n0 1\n");
}

TEST_CASE("missing edge list file reports the path") {
  CHECK_THROWS_WITH_AS(load_edge_list("/no/such/file.edges"),
                       "Cannot open file: /no/such/file.edges", std::runtime_error);
}

TEST_CASE("undirected dot output") {
  Graph g(3, {{0, 1}, {1, 2}});
  std::string dot = to_dot(g);
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);

  auto labels = line_graph_labels(g);
  REQUIRE(labels.size() == 2);
  CHECK(labels[0] == "(0,1)");
  CHECK(labels[1] == "(1,2)");
}

TEST_CASE("graph statistics report exact chromatic numbers on small graphs") {
  GraphStats p = graph_stats(catalog_build("path", std::vector<int>{4}));
  CHECK(p.chromatic_number == 2);
  CHECK(p.two_colorable);
  CHECK(p.chromatic_info() == "2");

  GraphStats k4 = graph_stats(catalog_build("complete", std::vector<int>{4}));
  CHECK(k4.chromatic_number == 4);
  CHECK_FALSE(k4.two_colorable);

  GraphStats c5 = graph_stats(catalog_build("cycle", std::vector<int>{5}));
  CHECK(c5.chromatic_number == 3);

  GraphStats pet = graph_stats(catalog_build("petersen", {}));
  CHECK(pet.chromatic_number == 3);
  CHECK(pet.max_degree == 3);

  GraphStats gh = graph_stats(catalog_build("goldner_harary", {}));
  CHECK(gh.chromatic_number == 4);
}
