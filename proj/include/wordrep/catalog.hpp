#pragma once

#include <span>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

struct CatalogEntry {
  std::string name;
  int param_count;        // number of integer parameters
  std::string params_doc; // human-readable parameter description
};

// Names and parameter conventions of every built-in constructor.
const std::vector<CatalogEntry>& catalog_entries();

// Builds a named graph. Throws std::invalid_argument on unknown names or bad
// parameters. Conventions:
//   path n        : n >= 1 vertices, edges (i, i+1)
//   cycle n       : n >= 3, path edges plus (0, n-1)
//   star k        : k >= 1 leaves around center 0
//   wheel k       : k >= 3 rim cycle 0..k-1 plus hub k joined to every rim
//                   vertex (k+1 vertices total)
//   complete n    : n >= 1, edges in lexicographic order
//   petersen      : outer 5-cycle, spokes, inner pentagram
//   tutte         : fixed 46-vertex, 69-edge table
//   herschel      : fixed 11-vertex, 18-edge table
//   goldner_harary: triangular bipyramid with a vertex stacked on each of
//                   its 6 faces (11 vertices, 27 edges)
//   hex_lattice r c: r x c honeycomb of hexagonal cells with one degree-2
//                   corner removed (the highest-numbered one); (2,3) gives
//                   21 vertices and 25 edges
Graph catalog_build(const std::string& name, std::span<const int> params);

}  // namespace wordrep
