#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "danchor/graph.hpp"

namespace danchor {

enum class WeightMode {
  kAuto,        // per line: two columns -> weight 1, three columns -> parse weight
  kUnweighted,  // exactly two columns, every edge gets weight 1
  kWeighted,    // exactly three columns
};

struct LoadResult {
  WeightedGraph graph;
  std::vector<std::string> warnings;
};

// Reads a SNAP-style edge list: '#' comment lines, whitespace-separated
// endpoint labels, optional weight column (positive decimal or p/q).
// Directed duplicates collapse into one undirected edge, self-loops are
// dropped (their endpoints stay as degree-0 vertices), and when the same
// edge reappears with a different weight the first weight wins and a
// warning is recorded.
LoadResult load_edge_list(std::istream& in, WeightMode mode = WeightMode::kAuto);
LoadResult load_edge_list_file(const std::string& path, WeightMode mode = WeightMode::kAuto);

// Canonical edge list: one "u v w" line per edge sorted by internal id,
// weights rendered exactly (terminating decimal or fraction). Reloading the
// output yields an isomorphic graph with identical weights.
std::string export_edge_list(const WeightedGraph& g);

// Graphviz rendering; vertices in `highlight` (optional) are drawn filled.
std::string export_dot(const WeightedGraph& g, const VertexSet* highlight = nullptr);

}  // namespace danchor
