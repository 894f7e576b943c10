#include "wordrep/words.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace wordrep {

namespace {

void require_letter(const Word& w, int x, const char* who) {
  if (x < 0 || x >= w.alphabet_size()) {
    throw std::invalid_argument(std::string(who) + ": letter " + std::to_string(x) +
                                " is outside the alphabet");
  }
}

// Candidate alternation graphs must match g exactly after relabeling; the
// permutation search maps candidate letters to g's vertices degree-first.
struct IsoMatch {
  const Graph& g;
  std::vector<std::vector<std::uint8_t>> adj_g;
  std::vector<int> deg_g;

  explicit IsoMatch(const Graph& target)
      : g(target), adj_g(target.adjacency_matrix()), deg_g(target.degrees()) {}

  bool extend(const Graph& h, const std::vector<std::vector<std::uint8_t>>& adj_h,
              const std::vector<int>& deg_h, std::vector<int>& map,
              std::vector<std::uint8_t>& used, int v) const {
    const int n = g.vertex_count();
    if (v == n) return true;
    for (int target = 0; target < n; ++target) {
      if (used[static_cast<size_t>(target)]) continue;
      if (deg_h[static_cast<size_t>(v)] != deg_g[static_cast<size_t>(target)]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        const bool in_h = adj_h[static_cast<size_t>(v)][static_cast<size_t>(u)] != 0;
        const bool in_g = adj_g[static_cast<size_t>(target)]
                               [static_cast<size_t>(map[static_cast<size_t>(u)])] != 0;
        if (in_h != in_g) ok = false;
      }
      if (!ok) continue;
      used[static_cast<size_t>(target)] = 1;
      map[static_cast<size_t>(v)] = target;
      if (extend(h, adj_h, deg_h, map, used, v + 1)) return true;
      used[static_cast<size_t>(target)] = 0;
    }
    return false;
  }

  // Returns a vertex map candidate -> target when the graphs are isomorphic.
  std::optional<std::vector<int>> find(const Graph& h) const {
    const int n = g.vertex_count();
    if (h.vertex_count() != n || h.edge_count() != g.edge_count()) return std::nullopt;
    auto deg_h = h.degrees();
    auto sorted_h = deg_h;
    auto sorted_g = deg_g;
    std::sort(sorted_h.begin(), sorted_h.end());
    std::sort(sorted_g.begin(), sorted_g.end());
    if (sorted_h != sorted_g) return std::nullopt;
    const auto adj_h = h.adjacency_matrix();
    std::vector<int> map(static_cast<size_t>(n), -1);
    std::vector<std::uint8_t> used(static_cast<size_t>(n), 0);
    if (extend(h, adj_h, deg_h, map, used, 0)) return map;
    return std::nullopt;
  }
};

}  // namespace

Word::Word(int alphabet_size, std::vector<int> letters)
    : alphabet_size_(alphabet_size), letters_(std::move(letters)) {
  if (alphabet_size_ < 0) throw std::invalid_argument("word: negative alphabet size");
  std::vector<std::uint8_t> seen(static_cast<size_t>(alphabet_size_), 0);
  for (int x : letters_) {
    if (x < 0 || x >= alphabet_size_) {
      throw std::invalid_argument("word: letter " + std::to_string(x) +
                                  " is outside the alphabet");
    }
    seen[static_cast<size_t>(x)] = 1;
  }
  for (int x = 0; x < alphabet_size_; ++x) {
    if (!seen[static_cast<size_t>(x)]) {
      throw std::invalid_argument("word: alphabet symbol " + std::to_string(x) +
                                  " never occurs");
    }
  }
}

Word parse_word(const std::string& text, int alphabet_size) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("word: bad letter '" + tok + "'");
    }
    if (pos != tok.size()) throw std::invalid_argument("word: bad letter '" + tok + "'");
    letters.push_back(value);
  }
  return Word(alphabet_size, std::move(letters));
}

std::string serialize_word(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.letters().size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(w.letters()[i]);
  }
  return out;
}

bool alternates(const Word& w, int x, int y) {
  require_letter(w, x, "alternates");
  require_letter(w, y, "alternates");
  if (x == y) throw std::invalid_argument("alternates: letters must differ");
  int prev = -1;
  for (int c : w.letters()) {
    if (c != x && c != y) continue;
    if (c == prev) return false;
    prev = c;
  }
  return true;
}

Graph alternation_graph(const Word& w) {
  std::vector<Edge> edges;
  for (int x = 0; x < w.alphabet_size(); ++x) {
    for (int y = x + 1; y < w.alphabet_size(); ++y) {
      if (alternates(w, x, y)) edges.push_back({x, y});
    }
  }
  return Graph(w.alphabet_size(), std::move(edges));
}

bool word_represents(const Word& w, const Graph& g) {
  if (w.alphabet_size() != g.vertex_count()) {
    throw std::invalid_argument("word_represents: alphabet must match the vertex set");
  }
  return same_edge_set(alternation_graph(w), g);
}

std::optional<Word> search_representant(const Graph& g, int occurrences_per_letter,
                                        int total_letter_bound) {
  const int n = g.vertex_count();
  const int k = occurrences_per_letter;
  if (k < 1) throw std::invalid_argument("search_representant: need at least one occurrence");
  if (static_cast<long long>(n) * k > total_letter_bound) {
    throw std::invalid_argument("search_representant: " + std::to_string(n) + " * " +
                                std::to_string(k) + " letters exceeds the bound " +
                                std::to_string(total_letter_bound));
  }
  if (n == 0) return Word(0, {});

  const IsoMatch matcher(g);
  const int length = n * k;
  std::vector<int> letters(static_cast<size_t>(length), 0);
  std::vector<int> remaining(static_cast<size_t>(n), k);
  std::optional<Word> result;

  // Fill positions left to right; a letter may be used while occurrences
  // remain, and the first unused letter is the only fresh one allowed, which
  // forces ascending first occurrences.
  const auto rec = [&](const auto& self, int pos, int opened) -> bool {
    if (pos == length) {
      const Word candidate(n, letters);
      const Graph h = alternation_graph(candidate);
      const auto map = matcher.find(h);
      if (!map.has_value()) return false;
      std::vector<int> relabeled(letters.size());
      for (size_t i = 0; i < letters.size(); ++i) {
        relabeled[i] = (*map)[static_cast<size_t>(letters[i])];
      }
      Word witness(n, std::move(relabeled));
      if (!word_represents(witness, g)) return false;
      result = std::move(witness);
      return true;
    }
    const int limit = std::min(opened + 1, n);
    for (int c = 0; c < limit; ++c) {
      if (remaining[static_cast<size_t>(c)] == 0) continue;
      --remaining[static_cast<size_t>(c)];
      letters[static_cast<size_t>(pos)] = c;
      if (self(self, pos + 1, std::max(opened, c + 1))) return true;
      ++remaining[static_cast<size_t>(c)];
    }
    return false;
  };
  rec(rec, 0, 0);
  return result;
}

}  // namespace wordrep
