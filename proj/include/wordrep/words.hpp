#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Finite sequence of letters over the alphabet {0, ..., alphabet_size - 1}.
// Every letter is in range and every alphabet symbol occurs at least once,
// so the alternation relation is defined on the whole alphabet.
class Word {
 public:
  Word() = default;
  // Throws std::invalid_argument when a letter is out of range or some
  // alphabet symbol never occurs.
  Word(int alphabet_size, std::vector<int> letters);

  int alphabet_size() const { return alphabet_size_; }
  const std::vector<int>& letters() const { return letters_; }

  bool operator==(const Word&) const = default;

 private:
  int alphabet_size_ = 0;
  std::vector<int> letters_;
};

// Whitespace-separated decimal letters; multi-digit ids are unambiguous.
Word parse_word(const std::string& text, int alphabet_size);
std::string serialize_word(const Word& w);

// True iff deleting all letters other than x and y leaves a strictly
// alternating sequence. Throws std::invalid_argument when x == y or either
// letter is outside the alphabet.
bool alternates(const Word& w, int x, int y);

// Graph on the alphabet with an edge {x, y} iff x and y alternate; edges in
// lexicographic order.
Graph alternation_graph(const Word& w);

// True iff the alternation graph of w has exactly g's edge set. Throws
// std::invalid_argument when the alphabet size differs from the vertex count.
bool word_represents(const Word& w, const Graph& g);

// Exhaustive search over k-uniform words, where k = occurrences_per_letter.
// Only words whose letters first occur in ascending order are enumerated
// (relabeling symmetry); a candidate whose alternation graph is isomorphic
// to g is relabeled back onto g's vertices, re-verified, and returned. A
// nullopt result means no k-uniform representant exists; it says nothing
// about other k. Throws std::invalid_argument when k < 1 or
// vertex_count * k exceeds total_letter_bound.
std::optional<Word> search_representant(const Graph& g, int occurrences_per_letter,
                                        int total_letter_bound = 14);

}  // namespace wordrep
