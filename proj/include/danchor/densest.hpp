#pragma once

#include "danchor/graph.hpp"

namespace danchor {

struct DensestResult {
  VertexSet subset;
  Rational density;
  bool exact;
};

// Exact densest subgraph via the flow network whose min cut at threshold g
// equals 2*w(V) - 2*max_S (w(S) - g|S|). The threshold search walks the
// candidate density grid by cut-value feedback with exact rational
// capacities; no floating point is involved. Among maximum-density subsets
// the smallest one is returned, ties broken lexicographically.
// Requires |E| >= 1.
DensestResult densest_exact(const WeightedGraph& g);

// Charikar-style greedy 1/2-approximation: repeatedly remove the vertex of
// minimum weighted degree (ties: smallest id) and keep the densest prefix.
// Requires |E| >= 1.
DensestResult densest_greedy(const WeightedGraph& g);

}  // namespace danchor
