#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "danchor/graph.hpp"

namespace danchor {

// Connectivity target derived from a host graph: with d its density and
// w_max its largest edge weight, tau = floor(ceil(d/w_max)/2) + 1 is the
// vertex-connectivity target and w_min*tau the edge-connectivity variant.
struct MaderThreshold {
  Rational density;
  Rational w_max;
  Rational w_min;
  std::int64_t tau;
  Rational edge_tau;

  static MaderThreshold from_graph(const WeightedGraph& g);
};

struct MaderResult {
  VertexSet subset;
  MaderThreshold threshold;
  // kappa(G[S]) in vertex mode, lambda(G[S]) in edge mode.
  Rational achieved_connectivity;
  Rational min_weighted_degree;
  // Splitting rounds performed; in vertex mode this never exceeds |V| - tau.
  std::uint32_t rounds;
};

// Maximal S whose induced minimum weighted degree exceeds d, or nullopt when
// no such subgraph exists. Removes the minimum-degree vertex (ties: smallest
// id) while the minimum is <= d.
std::optional<VertexSet> peel(const WeightedGraph& g, const Rational& d);

// Per-round snapshots of the candidate family, for tests that audit the
// search's invariants.
struct MaderTrace {
  std::vector<std::vector<VertexSet>> families;
};

// Extracts a tau-vertex-connected subgraph whose minimum weighted degree
// exceeds d(V); tau is computed from this graph's own density and w_max.
// Exists whenever |E| >= 1. Family search: peel, split at minimum vertex
// separators, keep peeled pieces with more than tau vertices, stop at a
// clique or at a piece whose minimum separator has size >= tau.
MaderResult mader_subgraph(const WeightedGraph& g, MaderTrace* trace = nullptr);

// Edge-connectivity variant: a subgraph with lambda >= w_min*tau and minimum
// weighted degree > d(V), found by peeling every subproblem and splitting
// along minimum cuts below the target.
MaderResult mader_edge_subgraph(const WeightedGraph& g);

}  // namespace danchor
