#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "wordrep/catalog.hpp"
#include "wordrep/graph.hpp"
#include "wordrep/words.hpp"

using namespace wordrep;

TEST_CASE("word construction validates letters and coverage") {
  Word w(3, {0, 1, 2, 1});
  CHECK(w.alphabet_size() == 3);
  CHECK(w.letters() == std::vector<int>{0, 1, 2, 1});

  CHECK_THROWS_AS(Word(3, {0, 1, 3}), std::invalid_argument);   // out of range
  CHECK_THROWS_AS(Word(3, {0, 1, 1}), std::invalid_argument);   // symbol 2 missing
  CHECK_THROWS_AS(Word(2, {0, -1}), std::invalid_argument);
}

TEST_CASE("word text round-trips") {
  Word w = parse_word("0 4 1 0 2 1 3 2 4 3", 5);
  CHECK(serialize_word(w) == "0 4 1 0 2 1 3 2 4 3");
  CHECK(parse_word(serialize_word(w), 5) == w);

  CHECK_THROWS_AS(parse_word("0 x 1", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("0 1 2", 2), std::invalid_argument);
}

TEST_CASE("alternation of two letters is decided on their subsequence") {
  Word w = parse_word("0 4 1 0 2 1 3 2 4 3", 5);
  CHECK(alternates(w, 0, 1));
  CHECK(alternates(w, 1, 0));  // symmetric
  CHECK(alternates(w, 0, 4));
  CHECK(alternates(w, 1, 2));
  CHECK(alternates(w, 2, 3));
  CHECK(alternates(w, 3, 4));
  CHECK_FALSE(alternates(w, 0, 2));
  CHECK_FALSE(alternates(w, 0, 3));
  CHECK_FALSE(alternates(w, 1, 3));
  CHECK_FALSE(alternates(w, 1, 4));
  CHECK_FALSE(alternates(w, 2, 4));

  CHECK_THROWS_AS(alternates(w, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(alternates(w, 0, 5), std::invalid_argument);
}

TEST_CASE("the ten-letter cyclic word represents the five-cycle") {
  Word w = parse_word("0 4 1 0 2 1 3 2 4 3", 5);
  Graph g = alternation_graph(w);
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 5);
  CHECK(word_represents(w, catalog_build("cycle", std::vector<int>{5})));
  CHECK_FALSE(word_represents(w, catalog_build("path", std::vector<int>{5})));
  CHECK_THROWS_AS(word_represents(w, catalog_build("cycle", std::vector<int>{4})),
                  std::invalid_argument);
}

TEST_CASE("single-occurrence words represent cliques") {
  for (int n = 2; n <= 5; ++n) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Graph kn = catalog_build("complete", std::vector<int>{n});
    do {
      CHECK(word_represents(Word(n, perm), kn));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("the palindromic double word represents the edgeless graph") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> letters;
    for (int i = 0; i < n; ++i) letters.push_back(i);
    for (int i = n - 1; i >= 0; --i) letters.push_back(i);
    Word w(n, letters);
    Graph g = alternation_graph(w);
    CHECK(g.vertex_count() == n);
    CHECK(g.edge_count() == 0);
  }
  CHECK(word_represents(Word(2, {0, 1, 1, 0}), Graph(2, {})));
}

TEST_CASE("alternation is invariant under word reversal") {
  std::mt19937 rng(31337);
  for (int iter = 0; iter < 40; ++iter) {
    std::uniform_int_distribution<int> nd(2, 5);
    const int n = nd(rng);
    std::uniform_int_distribution<int> len(n, 12);
    std::vector<int> letters;
    // always cover the alphabet, then pad randomly
    for (int i = 0; i < n; ++i) letters.push_back(i);
    const int extra = len(rng) - n;
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < extra; ++i) letters.push_back(pick(rng));
    std::shuffle(letters.begin(), letters.end(), rng);

    Word w(n, letters);
    std::vector<int> rev(letters.rbegin(), letters.rend());
    Word back(n, rev);
    CHECK(alternation_graph(w) == alternation_graph(back));
  }
}

TEST_CASE("representant search succeeds on known representable graphs") {
  Graph k3 = catalog_build("complete", std::vector<int>{3});
  auto w1 = search_representant(k3, 1);
  REQUIRE(w1.has_value());
  CHECK(word_represents(*w1, k3));
  CHECK(w1->letters().size() == 3);

  Graph c5 = catalog_build("cycle", std::vector<int>{5});
  auto w2 = search_representant(c5, 2);
  REQUIRE(w2.has_value());
  CHECK(word_represents(*w2, c5));
  CHECK(w2->letters().size() == 10);

  Graph e2(2, {});
  auto w3 = search_representant(e2, 2);
  REQUIRE(w3.has_value());
  CHECK(word_represents(*w3, e2));

  Graph p4 = catalog_build("path", std::vector<int>{4});
  auto w4 = search_representant(p4, 2);
  REQUIRE(w4.has_value());
  CHECK(word_represents(*w4, p4));
}

TEST_CASE("representant search reports absence for a fixed occupancy") {
  // no single-occurrence word can represent anything but a clique
  Graph p3 = catalog_build("path", std::vector<int>{3});
  CHECK_FALSE(search_representant(p3, 1).has_value());

  // the six-vertex wheel is not representable at all, so in particular
  // not by one or two occurrences per letter
  Graph w5 = catalog_build("wheel", std::vector<int>{5});
  CHECK_FALSE(search_representant(w5, 1, 20).has_value());
  CHECK_FALSE(search_representant(w5, 2, 20).has_value());
}

TEST_CASE("representant search guards its bounds") {
  Graph c5 = catalog_build("cycle", std::vector<int>{5});
  CHECK_THROWS_AS(search_representant(c5, 0), std::invalid_argument);
  CHECK_THROWS_AS(search_representant(c5, 3), std::invalid_argument);  // 15 letters > 14

  Graph empty(0, {});
  auto w = search_representant(empty, 2);
  REQUIRE(w.has_value());
  CHECK(w->letters().empty());
}
