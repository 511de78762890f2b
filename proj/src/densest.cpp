#include "danchor/densest.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include "danchor/error.hpp"
#include "maxflow.hpp"

namespace danchor {
namespace {

struct ThresholdNetwork {
  detail::MaxFlow<Rational> flow;
  VertexId n;
  std::uint32_t source;
  std::uint32_t sink;

  // Min cut of this network equals 2W - 2*max_S (w(S) - g|S|); the source
  // side of any min cut (minus the source) is a maximizer. `forced`, when
  // set, pins one vertex to the source side so the empty maximizer is
  // excluded.
  ThresholdNetwork(const WeightedGraph& g, const Rational& threshold,
                   std::optional<VertexId> forced)
      : flow(g.vertex_count() + 2),
        n(g.vertex_count()),
        source(g.vertex_count()),
        sink(g.vertex_count() + 1) {
    std::vector<Rational> degree(n, Rational(0));
    for (const auto& e : g.edges()) {
      degree[e.u] += e.weight;
      degree[e.v] += e.weight;
    }
    // strictly above any bipartition cut value, so never part of a min cut
    Rational big = g.total_weight() * Rational(2) +
                   threshold * Rational(2 * static_cast<std::int64_t>(n)) +
                   Rational(1);
    for (VertexId v = 0; v < n; ++v) {
      Rational cap = (forced && *forced == v) ? big : degree[v];
      if (cap.is_positive()) flow.add_arc(source, v, cap);
      flow.add_arc(v, sink, threshold * Rational(2));
    }
    for (const auto& e : g.edges()) {
      flow.add_arc(e.u, e.v, e.weight);
      flow.add_arc(e.v, e.u, e.weight);
    }
  }

  Rational run() { return flow.run(source, sink); }

  VertexSet minimal_source_side() const {
    auto reach = flow.residual_reachable(source);
    std::vector<VertexId> members;
    for (VertexId v = 0; v < n; ++v) {
      if (reach[v]) members.push_back(v);
    }
    return VertexSet(std::move(members));
  }

  VertexSet maximal_source_side() const {
    auto coreach = flow.residual_coreachable(sink);
    std::vector<VertexId> members;
    for (VertexId v = 0; v < n; ++v) {
      if (!coreach[v]) members.push_back(v);
    }
    return VertexSet(std::move(members));
  }
};

}  // namespace

DensestResult densest_exact(const WeightedGraph& g) {
  if (g.edge_count() == 0) throw DomainError("densest subgraph of edgeless graph");
  const Rational two_w = g.total_weight() * Rational(2);

  // Ascend through achievable densities: a cut below 2W at threshold d
  // certifies a strictly denser subset; equality certifies optimality.
  VertexSet best = VertexSet::full(g.vertex_count());
  Rational best_density = density(g, best);
  while (true) {
    ThresholdNetwork net(g, best_density, std::nullopt);
    Rational cut = net.run();
    if (cut == two_w) break;
    if (two_w < cut) throw InternalError("densest threshold cut above trivial cut");
    VertexSet improved = net.maximal_source_side();
    if (improved.empty()) throw InternalError("empty improving set in densest search");
    Rational improved_density = density(g, improved);
    if (!(best_density < improved_density)) {
      throw InternalError("densest threshold step failed to improve");
    }
    best = std::move(improved);
    best_density = improved_density;
  }

  // Canonical answer among all maximum-density subsets: smallest size, then
  // lexicographic. Every minimum-size optimum equals the minimal optimum
  // containing one of its vertices, so probing each vertex of the union of
  // optima (the maximal min-cut side at the optimal threshold) covers them.
  ThresholdNetwork final_net(g, best_density, std::nullopt);
  if (final_net.run() != two_w) throw InternalError("optimal threshold not tight");
  VertexSet candidates_union = final_net.maximal_source_side();
  if (candidates_union.empty()) {
    throw InternalError("no maximizer at optimal density threshold");
  }
  std::optional<VertexSet> chosen;
  for (VertexId v : candidates_union) {
    ThresholdNetwork probe(g, best_density, v);
    if (probe.run() != two_w) {
      throw InternalError("forced vertex left the maximizer union");
    }
    VertexSet candidate = probe.minimal_source_side();
    if (density(g, candidate) != best_density) {
      throw InternalError("probed candidate is not maximum-density");
    }
    if (!chosen || candidate.size() < chosen->size() ||
        (candidate.size() == chosen->size() && candidate < *chosen)) {
      chosen = std::move(candidate);
    }
  }
  return DensestResult{std::move(*chosen), best_density, true};
}

DensestResult densest_greedy(const WeightedGraph& g) {
  if (g.edge_count() == 0) throw DomainError("densest subgraph of edgeless graph");
  const VertexId n = g.vertex_count();
  std::vector<Rational> degree(n, Rational(0));
  for (const auto& e : g.edges()) {
    degree[e.u] += e.weight;
    degree[e.v] += e.weight;
  }
  std::vector<char> alive(n, 1);
  using Entry = std::pair<Rational, VertexId>;
  auto cmp = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return b.first < a.first;  // min-heap on degree
    return b.second < a.second;                        // then smallest id
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  for (VertexId v = 0; v < n; ++v) heap.push({degree[v], v});

  std::vector<VertexId> removal_order;
  Rational current_weight = g.total_weight();
  std::size_t current_size = n;
  Rational best_density = current_weight / Rational(static_cast<std::int64_t>(n));
  std::size_t best_prefix = 0;  // number of removals before the best snapshot

  while (current_size > 1) {
    Entry top = heap.top();
    heap.pop();
    if (!alive[top.second] || degree[top.second] != top.first) continue;  // stale
    VertexId v = top.second;
    alive[v] = 0;
    for (const auto& [u, w] : g.neighbors(v)) {
      if (alive[u]) {
        degree[u] -= w;
        heap.push({degree[u], u});
        current_weight -= w;
      }
    }
    removal_order.push_back(v);
    --current_size;
    Rational d = current_weight / Rational(static_cast<std::int64_t>(current_size));
    if (best_density < d) {
      best_density = d;
      best_prefix = removal_order.size();
    }
  }

  std::vector<char> removed(n, 0);
  for (std::size_t i = 0; i < best_prefix; ++i) removed[removal_order[i]] = 1;
  std::vector<VertexId> members;
  for (VertexId v = 0; v < n; ++v) {
    if (!removed[v]) members.push_back(v);
  }
  return DensestResult{VertexSet(std::move(members)), best_density, false};
}

}  // namespace danchor
