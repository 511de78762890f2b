#include "danchor/oracle.hpp"

#include <algorithm>
#include <bit>

#include "danchor/error.hpp"

namespace danchor::oracle {
namespace {

int popcount(std::uint64_t mask) { return std::popcount(mask); }

// Canonical pick among equally good subsets: fewest vertices first, then
// lexicographically smallest member sequence (masks compare that way when
// scanned from the lowest bit, so compare vertex lists directly).
bool better_canonical(const std::vector<std::uint32_t>& a,
                      const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<std::uint32_t> mask_members(std::uint64_t mask) {
  std::vector<std::uint32_t> out;
  while (mask) {
    out.push_back(static_cast<std::uint32_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

Analysis::Analysis(const WeightedGraph& g, OracleBudget budget) {
  n_ = g.vertex_count();
  if (n_ > budget.max_vertices) {
    throw BudgetError("graph exceeds the enumeration budget (" +
                      std::to_string(n_) + " > " +
                      std::to_string(budget.max_vertices) + " vertices)");
  }
  if (n_ > 24) throw BudgetError("enumeration limited to 24 vertices");
  if (budget.time_limit.count() > 0) {
    has_deadline_ = true;
    deadline_ = std::chrono::steady_clock::now() + budget.time_limit;
  }

  adj_.assign(n_, 0);
  for (const auto& e : g.edges()) {
    edge_ends_.emplace_back(e.u, e.v);
    edge_weight_.push_back(e.weight);
    adj_[e.u] |= 1ull << e.v;
    adj_[e.v] |= 1ull << e.u;
  }

  const std::uint64_t size = 1ull << n_;
  weight_.assign(size, Rational(0));
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(mask));
    std::uint64_t rest = mask & (mask - 1);
    Rational w = weight_[rest];
    std::uint64_t joint = adj_[v] & rest;
    if (joint) {
      for (const auto& [u, wt] : g.neighbors(v)) {
        if (rest & (1ull << u)) w += wt;
      }
    }
    weight_[mask] = w;
  }

  connected_.assign(size, 0);
  connected_[0] = 1;
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    std::uint64_t start = mask & ~(mask - 1);
    std::uint64_t seen = start;
    while (true) {
      std::uint64_t frontier = 0;
      std::uint64_t walk = seen;
      while (walk) {
        std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(walk));
        walk &= walk - 1;
        frontier |= adj_[v] & mask;
      }
      frontier &= ~seen;
      if (!frontier) break;
      seen |= frontier;
    }
    connected_[mask] = (seen == mask) ? 1 : 0;
    if ((mask & 0xfff) == 0) check_deadline();
  }
}

void Analysis::check_deadline() const {
  if (has_deadline_ && std::chrono::steady_clock::now() > deadline_) {
    throw BudgetError("enumeration time limit exceeded");
  }
}

void Analysis::ensure_lambda_table() const {
  if (!lambda_.empty()) return;
  const std::uint64_t size = 1ull << n_;
  lambda_.assign(size, Rational(0));
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    if (popcount(mask) < 2) continue;
    if (!connected_[mask]) continue;  // lambda stays 0
    bool first = true;
    Rational best(0);
    // every proper bipartition's crossing weight; the minimum is lambda
    for (std::uint64_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
      Rational cross = weight_[mask] - weight_[sub] - weight_[mask ^ sub];
      if (first || cross < best) {
        best = cross;
        first = false;
      }
    }
    lambda_[mask] = best;
    if ((mask & 0xff) == 0) check_deadline();
  }
}

void Analysis::ensure_kappa_table() const {
  if (!kappa_.empty()) return;
  const std::uint64_t size = 1ull << n_;
  kappa_.assign(size, -1);
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    int pop = popcount(mask);
    if (pop == 1) {
      kappa_[mask] = 0;
      continue;
    }
    if (!connected_[mask]) {
      kappa_[mask] = 0;
      continue;
    }
    // smallest removal set whose leftovers are disconnected; the empty
    // removal set never disconnects a connected graph, so starting from the
    // largest proper submask and skipping 0 is exhaustive
    int best = pop - 1;  // clique fallback
    for (std::uint64_t cut = (mask - 1) & mask; cut; cut = (cut - 1) & mask) {
      std::uint64_t rest = mask ^ cut;
      if (popcount(rest) < 2 || connected_[rest]) continue;
      int c = popcount(cut);
      if (c < best) best = c;
    }
    kappa_[mask] = best;
    if ((mask & 0xff) == 0) check_deadline();
  }
}

VertexSet Analysis::to_set(std::uint64_t mask) const {
  return VertexSet(mask_members(mask));
}

Rational Analysis::weight_of(std::uint64_t mask) const { return weight_[mask]; }
bool Analysis::connected(std::uint64_t mask) const { return connected_[mask]; }

Rational Analysis::lambda_of(std::uint64_t mask) const {
  ensure_lambda_table();
  return lambda_[mask];
}

std::uint32_t Analysis::kappa_of(std::uint64_t mask) const {
  ensure_kappa_table();
  return static_cast<std::uint32_t>(kappa_[mask]);
}

Rational Analysis::lambda_direct(std::uint64_t mask) const {
  if (popcount(mask) < 2) return Rational(0);
  if (!connected_[mask]) return Rational(0);
  bool first = true;
  Rational best(0);
  for (std::uint64_t sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask) {
    Rational cross = weight_[mask] - weight_[sub] - weight_[mask ^ sub];
    if (first || cross < best) {
      best = cross;
      first = false;
    }
  }
  return best;
}

std::uint32_t Analysis::kappa_direct(std::uint64_t mask) const {
  int pop = popcount(mask);
  if (pop <= 1) return 0;
  if (!connected_[mask]) return 0;
  int best = pop - 1;
  for (std::uint64_t cut = (mask - 1) & mask; cut; cut = (cut - 1) & mask) {
    std::uint64_t rest = mask ^ cut;
    if (popcount(rest) < 2 || connected_[rest]) continue;
    int c = popcount(cut);
    if (c < best) best = c;
  }
  return static_cast<std::uint32_t>(best);
}

std::uint32_t Analysis::kappa() const { return kappa_direct(full_mask()); }
Rational Analysis::lambda() const { return lambda_direct(full_mask()); }

Rational Analysis::min_weighted_degree_of(std::uint64_t mask) const {
  bool first = true;
  Rational best(0);
  std::uint64_t walk = mask;
  while (walk) {
    std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(walk));
    walk &= walk - 1;
    Rational deg = weight_[mask] - weight_[mask & ~(1ull << v)];
    if (first || deg < best) {
      best = deg;
      first = false;
    }
  }
  return best;
}

DensestResult Analysis::densest() const {
  const std::uint64_t size = 1ull << n_;
  bool first = true;
  Rational best(0);
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    Rational d = weight_[mask] / Rational(popcount(mask));
    if (first || best < d) {
      best = d;
      first = false;
    }
  }
  std::vector<std::uint32_t> chosen;
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    if (weight_[mask] / Rational(popcount(mask)) != best) continue;
    auto members = mask_members(mask);
    if (chosen.empty() || better_canonical(members, chosen)) chosen = members;
  }
  std::vector<VertexId> ids(chosen.begin(), chosen.end());
  return DensestResult{VertexSet(std::move(ids)), best, true};
}

std::vector<VertexSet> Analysis::maximal_k_edge(const Rational& k) const {
  ensure_lambda_table();
  const std::uint64_t size = 1ull << n_;
  std::vector<std::uint64_t> hits;
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    if (popcount(mask) < 2) continue;
    if (!connected_[mask]) continue;
    if (!(lambda_[mask] < k)) hits.push_back(mask);
  }
  std::vector<VertexSet> out;
  for (std::uint64_t m : hits) {
    bool maximal = true;
    for (std::uint64_t o : hits) {
      if (o != m && (m & o) == m) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(to_set(m));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.smallest() < b.smallest();
  });
  return out;
}

std::vector<VertexSet> Analysis::maximal_k_vertex(std::uint32_t k) const {
  ensure_kappa_table();
  const std::uint64_t size = 1ull << n_;
  std::vector<std::uint64_t> hits;
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    if (popcount(mask) < 2) continue;
    if (kappa_[mask] >= 0 && static_cast<std::uint32_t>(kappa_[mask]) >= k) {
      hits.push_back(mask);
    }
  }
  std::vector<VertexSet> out;
  for (std::uint64_t m : hits) {
    bool maximal = true;
    for (std::uint64_t o : hits) {
      if (o != m && (m & o) == m) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(to_set(m));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.smallest() != b.smallest()) return a.smallest() < b.smallest();
    return a < b;
  });
  return out;
}

std::pair<VertexSet, std::uint32_t> Analysis::most_connected_vertex() const {
  ensure_kappa_table();
  const std::uint64_t size = 1ull << n_;
  std::uint32_t best = 0;
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    best = std::max(best, static_cast<std::uint32_t>(kappa_[mask]));
  }
  std::vector<std::uint32_t> chosen;
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    if (static_cast<std::uint32_t>(kappa_[mask]) != best) continue;
    auto members = mask_members(mask);
    if (chosen.empty() || better_canonical(members, chosen)) chosen = members;
  }
  std::vector<VertexId> ids(chosen.begin(), chosen.end());
  return {VertexSet(std::move(ids)), best};
}

std::pair<VertexSet, Rational> Analysis::most_connected_edge() const {
  ensure_lambda_table();
  const std::uint64_t size = 1ull << n_;
  bool first = true;
  Rational best(0);
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    if (popcount(mask) < 2) continue;
    if (first || best < lambda_[mask]) {
      best = lambda_[mask];
      first = false;
    }
  }
  std::vector<std::uint32_t> chosen;
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    if (popcount(mask) < 2 || lambda_[mask] != best) continue;
    auto members = mask_members(mask);
    if (chosen.empty() || better_canonical(members, chosen)) chosen = members;
  }
  std::vector<VertexId> ids(chosen.begin(), chosen.end());
  return {VertexSet(std::move(ids)), best};
}

SolveOutcome Analysis::problem(const ProblemSpec& spec) const {
  const std::uint64_t size = 1ull << n_;
  bool vertex_mode = spec.mode == ProblemMode::kVertex;
  if (vertex_mode) {
    ensure_kappa_table();
  } else {
    ensure_lambda_table();
  }
  auto admissible = [&](std::uint64_t mask) {
    if (popcount(mask) < 2) return false;
    if (vertex_mode) {
      return Rational(kappa_[mask]) >= spec.k;
    }
    return !(lambda_[mask] < spec.k);
  };
  bool any = false;
  Rational best(0);
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    if (!admissible(mask)) continue;
    Rational d = weight_[mask] / Rational(popcount(mask));
    if (!any || best < d) {
      best = d;
      any = true;
    }
  }
  Guarantee guarantee{Rational(1), Rational(1), "brute-force"};
  if (!any) {
    return SolveOutcome{SolveStatus::kInfeasible, std::nullopt, std::nullopt,
                        std::nullopt, std::move(guarantee)};
  }
  std::vector<std::uint32_t> chosen;
  std::uint64_t chosen_mask = 0;
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    if (!admissible(mask)) continue;
    if (weight_[mask] / Rational(popcount(mask)) != best) continue;
    auto members = mask_members(mask);
    if (chosen.empty() || better_canonical(members, chosen)) {
      chosen = members;
      chosen_mask = mask;
    }
  }
  std::vector<VertexId> ids(chosen.begin(), chosen.end());
  Rational achieved = vertex_mode ? Rational(kappa_[chosen_mask]) : lambda_[chosen_mask];
  return SolveOutcome{SolveStatus::kFeasible, VertexSet(std::move(ids)), best,
                      achieved, std::move(guarantee)};
}

std::optional<VertexSet> Analysis::peel_fixpoint(const Rational& d) const {
  std::uint64_t mask = full_mask();
  while (mask) {
    std::uint64_t keep = 0;
    std::uint64_t walk = mask;
    while (walk) {
      std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(walk));
      walk &= walk - 1;
      Rational deg = weight_[mask] - weight_[mask & ~(1ull << v)];
      if (d < deg) keep |= 1ull << v;
    }
    if (keep == mask) return to_set(mask);
    mask = keep;
  }
  return std::nullopt;
}

std::optional<VertexSet> Analysis::mader_witness() const {
  ensure_kappa_table();
  if (edge_weight_.empty()) return std::nullopt;
  Rational w_max = edge_weight_.front();
  for (const auto& w : edge_weight_) {
    if (w_max < w) w_max = w;
  }
  Rational d = weight_[full_mask()] / Rational(n_);
  std::int64_t tau = (d / w_max).ceil() / 2 + 1;
  const std::uint64_t size = 1ull << n_;
  std::vector<std::uint32_t> chosen;
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    if (popcount(mask) < 2) continue;
    if (kappa_[mask] < tau) continue;
    if (!(d < min_weighted_degree_of(mask))) continue;
    auto members = mask_members(mask);
    if (chosen.empty() || better_canonical(members, chosen)) chosen = members;
  }
  if (chosen.empty()) return std::nullopt;
  std::vector<VertexId> ids(chosen.begin(), chosen.end());
  return VertexSet(std::move(ids));
}

std::optional<VertexSet> Analysis::minimal_witness_candidate() const {
  if (edge_weight_.empty()) return std::nullopt;
  Rational w_max = edge_weight_.front();
  for (const auto& w : edge_weight_) {
    if (w_max < w) w_max = w;
  }
  Rational d = weight_[full_mask()] / Rational(n_);
  Rational c(((d / w_max).ceil()));
  const std::uint64_t size = 1ull << n_;
  std::vector<std::uint32_t> chosen;
  for (std::uint64_t mask = 1; mask < size; ++mask) {
    Rational pop(popcount(mask));
    if (pop < c) continue;
    if (!(d * (pop - c / Rational(2)) < weight_[mask])) continue;
    auto members = mask_members(mask);
    if (chosen.empty() || better_canonical(members, chosen)) chosen = members;
  }
  if (chosen.empty()) return std::nullopt;
  std::vector<VertexId> ids(chosen.begin(), chosen.end());
  return VertexSet(std::move(ids));
}

DensestResult brute_densest(const WeightedGraph& g, OracleBudget budget) {
  if (g.edge_count() == 0) throw DomainError("densest subgraph of edgeless graph");
  return Analysis(g, budget).densest();
}

SolveOutcome brute_problem(const WeightedGraph& g, const ProblemSpec& spec,
                           OracleBudget budget) {
  return Analysis(g, budget).problem(spec);
}

std::uint32_t brute_kappa(const WeightedGraph& g, OracleBudget budget) {
  return Analysis(g, budget).kappa();
}

Rational brute_lambda(const WeightedGraph& g, OracleBudget budget) {
  if (g.vertex_count() < 2) throw DomainError("lambda needs at least two vertices");
  return Analysis(g, budget).lambda();
}

}  // namespace danchor::oracle
