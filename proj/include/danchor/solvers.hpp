#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "danchor/graph.hpp"

namespace danchor {

enum class ProblemMode { kVertex, kEdge };

// Problem instance: maximize d(S) subject to G[S] being k-vertex-connected
// (k a positive integer) or k-edge-connected (k a positive rational).
// gamma in [1,2] relaxes the connectivity constraint to k/gamma for the
// bicriteria solvers; gamma = 1 keeps the original constraint.
struct ProblemSpec {
  ProblemMode mode;
  Rational k;
  Rational gamma{1};
};

enum class SolveStatus { kFeasible, kInfeasible };

struct Guarantee {
  Rational density_ratio;       // lower bound on density(out)/OPT
  Rational connectivity_ratio;  // lower bound on connectivity(out)/k
  std::string method;
};

struct SolveOutcome {
  SolveStatus status;
  std::optional<VertexSet> subset;
  std::optional<Rational> density;
  std::optional<Rational> achieved_connectivity;
  Guarantee guarantee;

  bool feasible() const { return status == SolveStatus::kFeasible; }
};

// Per-candidate record of the bicriteria pipeline, for tests.
struct SolverTrace {
  struct Candidate {
    VertexSet component;      // maximal k-connected piece
    VertexSet densest;        // unconstrained densest subset inside it
    bool branch_taken;        // whether the extraction branch fired
    VertexSet chosen;         // the candidate that went into the argmax
  };
  std::vector<Candidate> candidates;
};

// Bicriteria solvers: decompose into maximal k-connected subgraphs, find the
// densest subset of each, and when k <= gamma*target swap in the extracted
// highly-connected subgraph. Output density >= (gamma/4)(w_min/w_max)*OPT
// and connectivity >= k/gamma, or INFEASIBLE when no k-connected induced
// subgraph exists.
SolveOutcome bicriteria_vertex(const WeightedGraph& g, std::int64_t k,
                               const Rational& gamma, SolverTrace* trace = nullptr);
SolveOutcome bicriteria_edge(const WeightedGraph& g, const Rational& k,
                             const Rational& gamma, SolverTrace* trace = nullptr);

// Ordinary solvers: return the most highly connected subgraph when it meets
// k, INFEASIBLE otherwise. Output density >= (6/19)(w_min/w_max)*OPT.
SolveOutcome approx_vertex(const WeightedGraph& g, std::int64_t k);
SolveOutcome approx_edge(const WeightedGraph& g, const Rational& k);

// Dispatch helper used by the CLI and C API.
SolveOutcome solve(const WeightedGraph& g, const ProblemSpec& spec, bool bicriteria);

}  // namespace danchor
