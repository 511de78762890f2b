#include "danchor/solvers.hpp"

#include <algorithm>

#include "danchor/connectivity.hpp"
#include "danchor/densest.hpp"
#include "danchor/error.hpp"
#include "danchor/mader.hpp"
#include "parallel.hpp"

namespace danchor {
namespace {

void check_gamma(const Rational& gamma) {
  if (gamma < Rational(1) || Rational(2) < gamma) {
    throw ValidationError("gamma must lie in [1,2]");
  }
}

Rational bicriteria_density_ratio(const WeightedGraph& g, const Rational& gamma) {
  auto [w_min, w_max] = extreme_weights(g);
  return gamma / Rational(4) * w_min / w_max;
}

Rational ordinary_density_ratio(const WeightedGraph& g) {
  auto [w_min, w_max] = extreme_weights(g);
  return Rational(6, 19) * w_min / w_max;
}

// Deterministic argmax over candidate subsets: highest density, then fewest
// vertices, then lexicographically smallest.
std::size_t pick_winner(const WeightedGraph& g, const std::vector<VertexSet>& sets,
                        Rational* density_out) {
  std::size_t best = 0;
  Rational best_density = density(g, sets[0]);
  for (std::size_t i = 1; i < sets.size(); ++i) {
    Rational d = density(g, sets[i]);
    if (best_density < d ||
        (d == best_density &&
         (sets[i].size() < sets[best].size() ||
          (sets[i].size() == sets[best].size() && sets[i] < sets[best])))) {
      best = i;
      best_density = d;
    }
  }
  *density_out = best_density;
  return best;
}

}  // namespace

SolveOutcome bicriteria_vertex(const WeightedGraph& g, std::int64_t k,
                               const Rational& gamma, SolverTrace* trace) {
  if (k < 1) throw ValidationError("k must be a positive integer");
  check_gamma(gamma);
  if (g.edge_count() == 0) throw DomainError("graph has no edges");

  Guarantee guarantee{bicriteria_density_ratio(g, gamma), Rational(1) / gamma,
                      "bicriteria-vertex"};
  auto family = maximal_k_vertex_connected(g, static_cast<std::uint32_t>(k));
  if (family.empty()) {
    return SolveOutcome{SolveStatus::kInfeasible, std::nullopt, std::nullopt,
                        std::nullopt, std::move(guarantee)};
  }

  const Rational w_max_g = extreme_weights(g).second;
  std::vector<SolverTrace::Candidate> records(family.size());
  parallel_for_index(family.size(), [&](std::size_t i) {
    const VertexSet& s_i = family[i];
    auto sub = induced(g, s_i);
    auto ds = densest_exact(sub.graph);
    VertexSet ds_parent = map_to_parent(sub.to_parent, ds.subset);
    // the branch condition uses the whole graph's w_max; the extraction
    // recomputes its own threshold from the subgraph it is handed
    std::int64_t tau_global = (ds.density / w_max_g).ceil() / 2 + 1;
    bool branch = !(gamma * Rational(tau_global) < Rational(k));
    VertexSet chosen = s_i;
    if (branch) {
      auto ds_sub = induced(g, ds_parent);
      auto extracted = mader_subgraph(ds_sub.graph);
      chosen = map_to_parent(ds_sub.to_parent, extracted.subset);
    }
    records[i] = SolverTrace::Candidate{s_i, std::move(ds_parent), branch,
                                        std::move(chosen)};
  });
  if (trace) trace->candidates = records;

  std::vector<VertexSet> chosen_sets;
  chosen_sets.reserve(records.size());
  for (auto& r : records) chosen_sets.push_back(r.chosen);
  Rational winner_density(0);
  std::size_t winner = pick_winner(g, chosen_sets, &winner_density);

  auto winner_sub = induced(g, chosen_sets[winner]);
  auto vc = vertex_connectivity(winner_sub.graph);
  return SolveOutcome{SolveStatus::kFeasible, chosen_sets[winner], winner_density,
                      Rational(static_cast<std::int64_t>(vc.kappa)),
                      std::move(guarantee)};
}

SolveOutcome bicriteria_edge(const WeightedGraph& g, const Rational& k,
                             const Rational& gamma, SolverTrace* trace) {
  if (!k.is_positive()) throw ValidationError("k must be positive");
  check_gamma(gamma);
  if (g.edge_count() == 0) throw DomainError("graph has no edges");

  Guarantee guarantee{bicriteria_density_ratio(g, gamma), Rational(1) / gamma,
                      "bicriteria-edge"};
  auto family = maximal_k_edge_connected(g, k);
  if (family.empty()) {
    return SolveOutcome{SolveStatus::kInfeasible, std::nullopt, std::nullopt,
                        std::nullopt, std::move(guarantee)};
  }

  auto [w_min_g, w_max_g] = extreme_weights(g);
  std::vector<SolverTrace::Candidate> records(family.size());
  parallel_for_index(family.size(), [&](std::size_t i) {
    const VertexSet& s_i = family[i];
    auto sub = induced(g, s_i);
    auto ds = densest_exact(sub.graph);
    VertexSet ds_parent = map_to_parent(sub.to_parent, ds.subset);
    std::int64_t tau_global = (ds.density / w_max_g).ceil() / 2 + 1;
    bool branch = !(gamma * w_min_g * Rational(tau_global) < k);
    VertexSet chosen = s_i;
    if (branch) {
      auto ds_sub = induced(g, ds_parent);
      auto extracted = mader_edge_subgraph(ds_sub.graph);
      chosen = map_to_parent(ds_sub.to_parent, extracted.subset);
    }
    records[i] = SolverTrace::Candidate{s_i, std::move(ds_parent), branch,
                                        std::move(chosen)};
  });
  if (trace) trace->candidates = records;

  std::vector<VertexSet> chosen_sets;
  chosen_sets.reserve(records.size());
  for (auto& r : records) chosen_sets.push_back(r.chosen);
  Rational winner_density(0);
  std::size_t winner = pick_winner(g, chosen_sets, &winner_density);

  auto winner_sub = induced(g, chosen_sets[winner]);
  auto ec = edge_connectivity(winner_sub.graph);
  return SolveOutcome{SolveStatus::kFeasible, chosen_sets[winner], winner_density,
                      ec.lambda, std::move(guarantee)};
}

SolveOutcome approx_vertex(const WeightedGraph& g, std::int64_t k) {
  if (k < 1) throw ValidationError("k must be a positive integer");
  if (g.edge_count() == 0) throw DomainError("graph has no edges");
  Guarantee guarantee{ordinary_density_ratio(g), Rational(1), "matula-vertex"};
  auto [subset, kappa] = most_connected_vertex(g);
  if (static_cast<std::int64_t>(kappa) < k) {
    return SolveOutcome{SolveStatus::kInfeasible, std::nullopt, std::nullopt,
                        std::nullopt, std::move(guarantee)};
  }
  Rational d = density(g, subset);
  return SolveOutcome{SolveStatus::kFeasible, std::move(subset), d,
                      Rational(static_cast<std::int64_t>(kappa)),
                      std::move(guarantee)};
}

SolveOutcome approx_edge(const WeightedGraph& g, const Rational& k) {
  if (!k.is_positive()) throw ValidationError("k must be positive");
  if (g.edge_count() == 0) throw DomainError("graph has no edges");
  Guarantee guarantee{ordinary_density_ratio(g), Rational(1), "matula-edge"};
  auto [subset, lambda] = most_connected_edge(g);
  if (lambda < k) {
    return SolveOutcome{SolveStatus::kInfeasible, std::nullopt, std::nullopt,
                        std::nullopt, std::move(guarantee)};
  }
  Rational d = density(g, subset);
  return SolveOutcome{SolveStatus::kFeasible, std::move(subset), d, lambda,
                      std::move(guarantee)};
}

SolveOutcome solve(const WeightedGraph& g, const ProblemSpec& spec, bool bicriteria) {
  if (spec.mode == ProblemMode::kVertex) {
    if (!spec.k.is_integer()) {
      throw ValidationError("vertex mode requires an integer k");
    }
    return bicriteria ? bicriteria_vertex(g, spec.k.numerator(), spec.gamma)
                      : approx_vertex(g, spec.k.numerator());
  }
  return bicriteria ? bicriteria_edge(g, spec.k, spec.gamma)
                    : approx_edge(g, spec.k);
}

}  // namespace danchor
