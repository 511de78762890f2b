#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "danchor/graph.hpp"

namespace danchor {

// Witness for an edge-connectivity value: removing cut_edges disconnects the
// graph, weight is their exact total, side is one shore of the cut.
struct CutCertificate {
  VertexSet side;
  std::vector<Edge> cut_edges;
  Rational weight;
};

// Witness for a vertex-connectivity value: removing `separator` splits the
// graph so that side_a and side_b have no edges between them.
struct SeparatorCertificate {
  VertexSet separator;
  VertexSet side_a;
  VertexSet side_b;
};

struct EdgeConnectivity {
  Rational lambda;
  CutCertificate cut;  // empty cut with one component as side when disconnected
};

struct VertexConnectivity {
  std::uint32_t kappa;  // |V|-1 for cliques by convention
  std::optional<SeparatorCertificate> separator;  // absent for cliques and disconnected graphs
};

struct ConnectivityReport {
  std::uint32_t kappa;
  Rational lambda;
  std::optional<SeparatorCertificate> separator;
  CutCertificate cut;
};

// Global minimum cut (Stoer-Wagner, exact weighted, deterministic
// tie-breaking). Requires |V| >= 2; returns lambda = 0 with an empty cut when
// the graph is disconnected.
EdgeConnectivity edge_connectivity(const WeightedGraph& g);

// Vertex connectivity by unit-capacity vertex-split max-flow over the
// standard non-adjacent-pair schedule. Edge weights are ignored (kappa is a
// cardinality). A separator certificate is returned iff the graph is
// connected and not a clique.
VertexConnectivity vertex_connectivity(const WeightedGraph& g);

ConnectivityReport analyze_connectivity(const WeightedGraph& g);

// All maximal S with G[S] k-edge-connected and |S| >= 2 (pairwise disjoint,
// ordered by smallest member). Recursive min-cut splitting.
std::vector<VertexSet> maximal_k_edge_connected(const WeightedGraph& g,
                                                const Rational& k);

// All maximal S with G[S] k-vertex-connected (sets may overlap). Recursive
// separator splitting with containment filtering.
std::vector<VertexSet> maximal_k_vertex_connected(const WeightedGraph& g,
                                                  std::uint32_t k);

// S maximizing kappa(G[S]) over all subsets, found by family splitting along
// minimum separators (Matula-style search). Requires |E| >= 1.
std::pair<VertexSet, std::uint32_t> most_connected_vertex(const WeightedGraph& g);

// S (|S| >= 2) maximizing lambda(G[S]), by recursing on both shores of the
// minimum cut. Requires |E| >= 1.
std::pair<VertexSet, Rational> most_connected_edge(const WeightedGraph& g);

}  // namespace danchor
