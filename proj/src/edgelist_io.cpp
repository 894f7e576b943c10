#include "wordrep/edgelist_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wordrep {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& why) {
  throw std::runtime_error("edge list line " + std::to_string(line_no) + ": " + why);
}

// Returns false for comment/blank lines, true with both ints parsed otherwise.
bool parse_int_pair(const std::string& line, int line_no, long long& a, long long& b) {
  size_t pos = line.find_first_not_of(" \t\r");
  if (pos == std::string::npos || line[pos] == '#') return false;
  std::istringstream in(line);
  if (!(in >> a >> b)) parse_fail(line_no, "expected two integers, got \"" + line + "\"");
  std::string rest;
  if (in >> rest) parse_fail(line_no, "trailing content \"" + rest + "\"");
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    long long a, b;
    if (!parse_int_pair(line, line_no, a, b)) continue;
    if (n < 0) {
      if (a < 0 || b < 0) parse_fail(line_no, "negative count in header");
      n = a;
      m = b;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      parse_fail(line_no, "more than the declared " + std::to_string(m) + " edges");
    }
    if (a < 0 || a >= n || b < 0 || b >= n) {
      parse_fail(line_no, "endpoint out of range [0, " + std::to_string(n) + ")");
    }
    if (a == b) parse_fail(line_no, "loop at vertex " + std::to_string(a));
    Edge e{static_cast<int>(std::min(a, b)), static_cast<int>(std::max(a, b))};
    for (const Edge& prev : edges) {
      if (prev == e) {
        parse_fail(line_no, "duplicate edge (" + std::to_string(e.first) + ", " +
                                std::to_string(e.second) + ")");
      }
    }
    edges.push_back(e);
  }
  if (n < 0) throw std::runtime_error("edge list: missing \"n m\" header");
  if (static_cast<long long>(edges.size()) != m) {
    throw std::runtime_error("edge list: declared " + std::to_string(m) + " edges, found " +
                             std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("Cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "graph g {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (!labels.empty()) out << " [label=\"" << labels[static_cast<size_t>(v)] << "\"]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<std::string> line_graph_labels(const Graph& g) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(g.edge_count()));
  for (const auto& [u, v] : g.edges()) {
    labels.push_back("(" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  return labels;
}

}  // namespace wordrep
