#pragma once

// Brute-force reference implementations for tests. Everything here works by
// subset enumeration over bitmasks and plain reachability checks; none of it
// shares algorithm code with the production modules it cross-checks.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "danchor/densest.hpp"
#include "danchor/graph.hpp"
#include "danchor/solvers.hpp"

namespace danchor::oracle {

struct OracleBudget {
  std::uint32_t max_vertices = 12;
  // 0 = no limit; otherwise enumeration aborts with BudgetError once exceeded.
  std::chrono::milliseconds time_limit{0};
};

// Precomputed per-subset tables for one graph; build once, query many times.
class Analysis {
 public:
  explicit Analysis(const WeightedGraph& g, OracleBudget budget = {});

  DensestResult densest() const;
  std::uint32_t kappa() const;           // whole graph
  Rational lambda() const;               // whole graph
  std::uint32_t kappa_of(std::uint64_t mask) const;
  Rational lambda_of(std::uint64_t mask) const;
  // Single-mask variants that skip the full per-subset tables; same values.
  std::uint32_t kappa_direct(std::uint64_t mask) const;
  Rational lambda_direct(std::uint64_t mask) const;
  Rational weight_of(std::uint64_t mask) const;
  bool connected(std::uint64_t mask) const;
  Rational min_weighted_degree_of(std::uint64_t mask) const;

  std::vector<VertexSet> maximal_k_edge(const Rational& k) const;
  std::vector<VertexSet> maximal_k_vertex(std::uint32_t k) const;
  std::pair<VertexSet, std::uint32_t> most_connected_vertex() const;
  std::pair<VertexSet, Rational> most_connected_edge() const;
  SolveOutcome problem(const ProblemSpec& spec) const;

  // Unique maximal subset whose induced minimum weighted degree exceeds d,
  // by simultaneous filtering to the fixed point.
  std::optional<VertexSet> peel_fixpoint(const Rational& d) const;

  // Canonical (smallest, then lexicographic) subset that is tau-vertex-
  // connected with minimum weighted degree above the graph density, where
  // tau = floor(ceil(d/w_max)/2)+1.
  std::optional<VertexSet> mader_witness() const;

  // Minimum-size subset S with |S| >= ceil(d/w_max) and
  // w(S) > d * (|S| - ceil(d/w_max)/2), d the graph density; ties broken
  // lexicographically. The whole vertex set always qualifies, so this never
  // comes back empty when |E| >= 1.
  std::optional<VertexSet> minimal_witness_candidate() const;

  VertexSet to_set(std::uint64_t mask) const;
  std::uint64_t full_mask() const { return (n_ == 64) ? ~0ull : (1ull << n_) - 1; }
  std::uint32_t vertex_count() const { return n_; }

 private:
  void ensure_lambda_table() const;
  void ensure_kappa_table() const;
  void check_deadline() const;

  std::uint32_t n_;
  std::vector<Rational> edge_weight_;    // parallel to edge list
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_ends_;
  std::vector<std::uint64_t> adj_;       // neighborhood bitmasks
  std::vector<Rational> weight_;         // w(S) per mask
  std::vector<char> connected_;          // per mask
  mutable std::vector<Rational> lambda_; // lazy, per mask
  mutable std::vector<std::int32_t> kappa_;  // lazy, per mask (-1 = unset)
  std::chrono::steady_clock::time_point deadline_{};
  bool has_deadline_ = false;
};

// One-shot wrappers matching the Analysis queries.
DensestResult brute_densest(const WeightedGraph& g, OracleBudget budget = {});
SolveOutcome brute_problem(const WeightedGraph& g, const ProblemSpec& spec,
                           OracleBudget budget = {});
std::uint32_t brute_kappa(const WeightedGraph& g, OracleBudget budget = {});
Rational brute_lambda(const WeightedGraph& g, OracleBudget budget = {});

}  // namespace danchor::oracle
