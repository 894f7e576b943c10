#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Plain text edge-list format. First data line is "n m", followed by m lines
// "u v" with 0-based endpoints. Lines starting with '#' are comments and may
// appear anywhere; blank lines are ignored. Throws std::runtime_error with a
// line number on malformed input, loops, duplicates, or out-of-range
// endpoints.
Graph parse_edge_list(std::string_view text);

// Reads the file and parses it. Throws std::runtime_error if the file cannot
// be opened.
Graph load_edge_list(const std::string& path);

// Inverse of parse_edge_list for comment-free text: "n m" header plus one
// "u v" line per edge in stored order, LF line endings.
std::string serialize_edge_list(const Graph& g);

// Graphviz text for an undirected graph. Vertices are labeled by index, or
// by the given strings when labels are supplied (one per vertex).
std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {});

// Labels "(u,v)" for the vertices of line_graph(g), one per edge of g.
std::vector<std::string> line_graph_labels(const Graph& g);

}  // namespace wordrep
