#include "danchor/mader.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include "danchor/connectivity.hpp"
#include "danchor/error.hpp"

namespace danchor {

MaderThreshold MaderThreshold::from_graph(const WeightedGraph& g) {
  if (g.edge_count() == 0) throw DomainError("threshold needs at least one edge");
  auto [w_min, w_max] = extreme_weights(g);
  Rational d = danchor::density(g);  // the field name shadows the free function
  std::int64_t ratio_ceil = (d / w_max).ceil();
  std::int64_t tau = ratio_ceil / 2 + 1;  // floor(ceil(d/w_max)/2) + 1, all >= 0
  return MaderThreshold{d, w_max, w_min, tau,
                        w_min * Rational(tau)};
}

std::optional<VertexSet> peel(const WeightedGraph& g, const Rational& d) {
  const VertexId n = g.vertex_count();
  std::vector<Rational> degree(n, Rational(0));
  for (const auto& e : g.edges()) {
    degree[e.u] += e.weight;
    degree[e.v] += e.weight;
  }
  std::vector<char> alive(n, 1);
  using Entry = std::pair<Rational, VertexId>;
  auto cmp = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return b.first < a.first;
    return b.second < a.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
  for (VertexId v = 0; v < n; ++v) heap.push({degree[v], v});

  std::size_t alive_count = n;
  while (alive_count > 0) {
    Entry top = heap.top();
    if (!alive[top.second] || degree[top.second] != top.first) {
      heap.pop();
      continue;
    }
    if (d < top.first) break;  // current minimum degree already above d
    heap.pop();
    VertexId v = top.second;
    alive[v] = 0;
    --alive_count;
    for (const auto& [u, w] : g.neighbors(v)) {
      if (alive[u]) {
        degree[u] -= w;
        heap.push({degree[u], u});
      }
    }
  }
  if (alive_count == 0) return std::nullopt;
  std::vector<VertexId> members;
  for (VertexId v = 0; v < n; ++v) {
    if (alive[v]) members.push_back(v);
  }
  return VertexSet(std::move(members));
}

namespace {

bool subset_is_clique(const WeightedGraph& g, const VertexSet& s) {
  std::size_t inside = 0;
  for (const auto& e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) ++inside;
  }
  return inside == s.size() * (s.size() - 1) / 2;
}

MaderResult finish_vertex(const WeightedGraph& g, const MaderThreshold& threshold,
                          VertexSet subset, std::uint32_t rounds) {
  auto sub = induced(g, subset);
  auto vc = vertex_connectivity(sub.graph);
  Rational min_deg = min_weighted_degree(g, subset);
  if (static_cast<std::int64_t>(vc.kappa) < threshold.tau ||
      !(threshold.density < min_deg)) {
    throw InternalError("extracted subgraph misses its connectivity/degree target");
  }
  return MaderResult{std::move(subset), threshold,
                     Rational(static_cast<std::int64_t>(vc.kappa)), min_deg, rounds};
}

}  // namespace

MaderResult mader_subgraph(const WeightedGraph& g, MaderTrace* trace) {
  const MaderThreshold threshold = MaderThreshold::from_graph(g);
  const Rational& d = threshold.density;
  const std::int64_t tau = threshold.tau;

  auto peeled = peel(g, d);
  if (!peeled) throw InternalError("peel emptied a graph of positive density");

  std::vector<VertexSet> family;
  {
    auto sub = induced(g, *peeled);
    for (const auto& comp : connected_components(sub.graph)) {
      if (comp.size() >= static_cast<std::size_t>(tau) + 1) {
        family.push_back(map_to_parent(sub.to_parent, comp));
      }
    }
  }
  if (family.empty()) throw InternalError("no candidate piece above tau vertices");
  for (const auto& piece : family) {
    if (subset_is_clique(g, piece)) return finish_vertex(g, threshold, piece, 0);
  }
  if (trace) trace->families.push_back(family);

  std::uint32_t rounds = 0;
  while (true) {
    if (family.empty()) throw InternalError("candidate family ran dry");
    ++rounds;
    if (rounds > g.vertex_count()) {
      throw InternalError("splitting loop exceeded the vertex count");
    }
    // smallest piece first, ties by smallest member
    std::size_t pick = 0;
    for (std::size_t i = 1; i < family.size(); ++i) {
      if (family[i].size() < family[pick].size() ||
          (family[i].size() == family[pick].size() &&
           family[i].smallest() < family[pick].smallest())) {
        pick = i;
      }
    }
    VertexSet piece = family[pick];
    auto sub = induced(g, piece);
    auto vc = vertex_connectivity(sub.graph);
    if (static_cast<std::int64_t>(vc.kappa) >= tau) {
      return finish_vertex(g, threshold, piece, rounds);
    }
    VertexSet separator;
    if (vc.separator) {
      separator = map_to_parent(sub.to_parent, vc.separator->separator);
    } else if (sub.graph.is_clique()) {
      // insertion-time clique checks make this unreachable
      throw InternalError("clique piece reached the separator step");
    }
    VertexSet remainder = piece.set_difference(separator);
    std::vector<VertexSet> fresh;
    if (!remainder.empty()) {
      auto rest = induced(g, remainder);
      for (const auto& comp : connected_components(rest.graph)) {
        VertexSet candidate =
            map_to_parent(rest.to_parent, comp).set_union(separator);
        auto candidate_sub = induced(g, candidate);
        auto kept = peel(candidate_sub.graph, d);
        if (kept && kept->size() >= static_cast<std::size_t>(tau) + 1) {
          fresh.push_back(map_to_parent(candidate_sub.to_parent, *kept));
        }
      }
    }
    for (const auto& candidate : fresh) {
      if (subset_is_clique(g, candidate)) {
        return finish_vertex(g, threshold, candidate, rounds);
      }
    }
    family.erase(family.begin() + static_cast<std::ptrdiff_t>(pick));
    family.insert(family.end(), fresh.begin(), fresh.end());
    if (trace) trace->families.push_back(family);
  }
}

MaderResult mader_edge_subgraph(const WeightedGraph& g) {
  const MaderThreshold threshold = MaderThreshold::from_graph(g);
  const Rational& d = threshold.density;

  std::vector<VertexSet> stack{VertexSet::full(g.vertex_count())};
  std::uint32_t rounds = 0;
  while (!stack.empty()) {
    VertexSet raw = std::move(stack.back());
    stack.pop_back();
    if (raw.empty()) continue;
    ++rounds;
    auto raw_sub = induced(g, raw);
    auto kept = peel(raw_sub.graph, d);
    if (!kept) continue;
    VertexSet piece = map_to_parent(raw_sub.to_parent, *kept);
    // min weighted degree > d > 0 forces at least two vertices
    auto sub = induced(g, piece);
    auto ec = edge_connectivity(sub.graph);
    if (!(ec.lambda < threshold.edge_tau)) {
      Rational min_deg = min_weighted_degree(g, piece);
      if (!(d < min_deg)) {
        throw InternalError("peeled piece violates its degree bound");
      }
      return MaderResult{std::move(piece), threshold, ec.lambda, min_deg, rounds};
    }
    VertexSet side = map_to_parent(sub.to_parent, ec.cut.side);
    VertexSet other = piece.set_difference(side);
    if (!other.empty() && (side.empty() || other.smallest() < side.smallest())) {
      std::swap(side, other);
    }
    stack.push_back(std::move(other));
    stack.push_back(std::move(side));
  }
  throw InternalError("edge-variant extraction exhausted all subproblems");
}

}  // namespace danchor
