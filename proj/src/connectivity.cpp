#include "danchor/connectivity.hpp"

#include <algorithm>
#include <set>

#include "danchor/error.hpp"
#include "maxflow.hpp"

namespace danchor {
namespace {

CutCertificate make_cut_certificate(const WeightedGraph& g, VertexSet side) {
  CutCertificate cert;
  cert.weight = Rational(0);
  for (const auto& e : g.edges()) {
    if (side.contains(e.u) != side.contains(e.v)) {
      cert.cut_edges.push_back(e);
      cert.weight += e.weight;
    }
  }
  cert.side = std::move(side);
  return cert;
}

}  // namespace

EdgeConnectivity edge_connectivity(const WeightedGraph& g) {
  const VertexId n = g.vertex_count();
  if (n < 2) throw DomainError("edge connectivity needs at least two vertices");

  auto components = connected_components(g);
  if (components.size() > 1) {
    return EdgeConnectivity{Rational(0), make_cut_certificate(g, components.front())};
  }

  // Stoer-Wagner over contracted supernodes. Deterministic: phases start at
  // the lowest surviving representative and maximum-adjacency ties pick the
  // smallest representative id.
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n, Rational(0)));
  for (const auto& e : g.edges()) {
    w[e.u][e.v] += e.weight;
    w[e.v][e.u] += e.weight;
  }
  std::vector<std::vector<VertexId>> members(n);
  std::vector<char> alive(n, 1);
  for (VertexId v = 0; v < n; ++v) members[v] = {v};

  bool have_best = false;
  Rational best_weight(0);
  std::vector<VertexId> best_side;

  std::uint32_t active = n;
  while (active >= 2) {
    std::vector<char> in_a(n, 0);
    std::vector<Rational> key(n, Rational(0));
    VertexId start = 0;
    while (!alive[start]) ++start;
    in_a[start] = 1;
    for (VertexId v = 0; v < n; ++v) {
      if (alive[v] && !in_a[v]) key[v] = w[start][v];
    }
    VertexId prev = start;
    VertexId last = start;
    for (std::uint32_t added = 1; added < active; ++added) {
      VertexId pick = n;
      for (VertexId v = 0; v < n; ++v) {
        if (!alive[v] || in_a[v]) continue;
        if (pick == n || key[pick] < key[v]) pick = v;
      }
      in_a[pick] = 1;
      prev = last;
      last = pick;
      for (VertexId v = 0; v < n; ++v) {
        if (alive[v] && !in_a[v]) key[v] += w[pick][v];
      }
    }
    const Rational& phase_cut = key[last];
    if (!have_best || phase_cut < best_weight) {
      have_best = true;
      best_weight = phase_cut;
      best_side = members[last];
    }
    // contract last into prev
    for (VertexId v = 0; v < n; ++v) {
      if (!alive[v] || v == last || v == prev) continue;
      w[prev][v] += w[last][v];
      w[v][prev] = w[prev][v];
    }
    members[prev].insert(members[prev].end(), members[last].begin(),
                         members[last].end());
    alive[last] = 0;
    --active;
  }

  CutCertificate cert = make_cut_certificate(g, VertexSet(std::move(best_side)));
  if (cert.weight != best_weight) {
    throw InternalError("min-cut certificate weight mismatch");
  }
  return EdgeConnectivity{best_weight, std::move(cert)};
}

namespace {

// Unit-capacity split network: vertex v becomes v_in = 2v, v_out = 2v+1.
// Max flow from s_out to t_in equals the smallest vertex set separating two
// non-adjacent vertices s and t.
struct SplitFlow {
  detail::MaxFlow<std::int64_t> flow;
  VertexId n;

  SplitFlow(const WeightedGraph& g, VertexId s, VertexId t)
      : flow(2 * g.vertex_count()), n(g.vertex_count()) {
    const std::int64_t big = static_cast<std::int64_t>(n) + 1;
    for (VertexId v = 0; v < n; ++v) {
      if (v != s && v != t) flow.add_arc(2 * v, 2 * v + 1, 1);
    }
    for (const auto& e : g.edges()) {
      flow.add_arc(2 * e.u + 1, 2 * e.v, big);
      flow.add_arc(2 * e.v + 1, 2 * e.u, big);
    }
    // source and sink pass through freely
    flow.add_arc(2 * s, 2 * s + 1, big);
    flow.add_arc(2 * t, 2 * t + 1, big);
  }

  std::int64_t run(VertexId s, VertexId t, std::int64_t limit) {
    return flow.run(2 * s + 1, 2 * t, limit);
  }

  VertexSet min_separator(VertexId s) const {
    auto reach = flow.residual_reachable(2 * s + 1);
    std::vector<VertexId> cut;
    for (VertexId v = 0; v < n; ++v) {
      if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
    }
    return VertexSet(std::move(cut));
  }
};

bool adjacent(const WeightedGraph& g, VertexId u, VertexId v) {
  const auto& nb = g.neighbors(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v,
                             [](const auto& p, VertexId x) { return p.first < x; });
  return it != nb.end() && it->first == v;
}

}  // namespace

VertexConnectivity vertex_connectivity(const WeightedGraph& g) {
  const VertexId n = g.vertex_count();
  if (n == 0) throw DomainError("vertex connectivity of empty graph");
  if (g.is_clique()) return VertexConnectivity{n - 1, std::nullopt};
  if (!is_connected(g)) return VertexConnectivity{0, std::nullopt};

  std::uint32_t best = n - 1;
  std::optional<VertexSet> best_cut;
  VertexId best_s = 0;

  // Even-Tarjan schedule: sources run through the first best+1 vertices,
  // paired with every non-adjacent target. At least one scheduled source
  // avoids an optimal separator, so the minimum is reached.
  for (VertexId s = 0; s < n; ++s) {
    if (s > best) break;
    for (VertexId t = 0; t < n; ++t) {
      if (t == s || adjacent(g, s, t)) continue;
      SplitFlow net(g, s, t);
      std::int64_t value = net.run(s, t, static_cast<std::int64_t>(best));
      if (value < static_cast<std::int64_t>(best)) {
        best = static_cast<std::uint32_t>(value);
        best_cut = net.min_separator(s);
        best_s = s;
      }
    }
  }

  if (!best_cut) {
    // connected non-clique always has a separating non-adjacent pair
    throw InternalError("vertex connectivity search found no separator");
  }

  SeparatorCertificate cert;
  cert.separator = *best_cut;
  VertexSet rest = VertexSet::full(n).set_difference(cert.separator);
  auto sub = induced(g, rest);
  auto comps = connected_components(sub.graph);
  if (comps.size() < 2) throw InternalError("separator certificate does not separate");
  VertexSet side_a = map_to_parent(sub.to_parent, comps.front());
  if (!side_a.contains(best_s)) {
    for (const auto& comp : comps) {
      VertexSet mapped = map_to_parent(sub.to_parent, comp);
      if (mapped.contains(best_s)) {
        side_a = mapped;
        break;
      }
    }
  }
  cert.side_a = side_a;
  cert.side_b = rest.set_difference(side_a);
  return VertexConnectivity{best, std::move(cert)};
}

ConnectivityReport analyze_connectivity(const WeightedGraph& g) {
  auto vc = vertex_connectivity(g);
  auto ec = edge_connectivity(g);
  return ConnectivityReport{vc.kappa, ec.lambda, std::move(vc.separator),
                            std::move(ec.cut)};
}

std::vector<VertexSet> maximal_k_edge_connected(const WeightedGraph& g,
                                                const Rational& k) {
  if (!k.is_positive()) throw DomainError("k must be positive");
  std::vector<VertexSet> out;
  std::vector<VertexSet> stack;
  if (g.vertex_count() >= 2) stack.push_back(VertexSet::full(g.vertex_count()));
  while (!stack.empty()) {
    VertexSet s = std::move(stack.back());
    stack.pop_back();
    if (s.size() < 2) continue;
    auto sub = induced(g, s);
    auto ec = edge_connectivity(sub.graph);
    if (!(ec.lambda < k)) {
      out.push_back(std::move(s));
      continue;
    }
    VertexSet side = map_to_parent(sub.to_parent, ec.cut.side);
    VertexSet other = s.set_difference(side);
    // process the side holding the smallest vertex first
    if (!other.empty() && (side.empty() || other.smallest() < side.smallest())) {
      std::swap(side, other);
    }
    stack.push_back(std::move(other));
    stack.push_back(std::move(side));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.smallest() < b.smallest();
  });
  return out;
}

std::vector<VertexSet> maximal_k_vertex_connected(const WeightedGraph& g,
                                                  std::uint32_t k) {
  if (k < 1) throw DomainError("k must be at least 1");
  std::set<VertexSet> candidates;
  std::set<VertexSet> visited;
  std::vector<VertexSet> stack;
  if (g.vertex_count() >= 2) stack.push_back(VertexSet::full(g.vertex_count()));
  while (!stack.empty()) {
    VertexSet s = std::move(stack.back());
    stack.pop_back();
    if (s.size() < static_cast<std::size_t>(k) + 1) continue;
    if (!visited.insert(s).second) continue;
    auto sub = induced(g, s);
    auto vc = vertex_connectivity(sub.graph);
    if (vc.kappa >= k) {
      candidates.insert(std::move(s));
      continue;
    }
    VertexSet separator;  // empty when disconnected
    if (vc.separator) {
      separator = map_to_parent(sub.to_parent, vc.separator->separator);
    } else if (sub.graph.is_clique()) {
      continue;  // clique below k: no subset can reach k either
    }
    VertexSet remainder = s.set_difference(separator);
    if (remainder.empty()) continue;
    auto rest = induced(g, remainder);
    for (const auto& comp : connected_components(rest.graph)) {
      stack.push_back(map_to_parent(rest.to_parent, comp).set_union(separator));
    }
  }
  // drop non-maximal candidates (the family is O(|V|), pairwise test is fine)
  std::vector<VertexSet> family(candidates.begin(), candidates.end());
  std::vector<VertexSet> out;
  for (const auto& s : family) {
    bool dominated = false;
    for (const auto& t : family) {
      if (&s != &t && s.size() < t.size() && s.is_subset_of(t)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.smallest() != b.smallest()) return a.smallest() < b.smallest();
    return a < b;
  });
  return out;
}

std::pair<VertexSet, std::uint32_t> most_connected_vertex(const WeightedGraph& g) {
  if (g.edge_count() == 0) throw DomainError("graph has no edges");
  bool have_best = false;
  VertexSet best_set;
  std::uint32_t best_kappa = 0;
  std::set<VertexSet> visited;
  std::vector<VertexSet> stack{VertexSet::full(g.vertex_count())};
  while (!stack.empty()) {
    VertexSet s = std::move(stack.back());
    stack.pop_back();
    // kappa(G[S]) <= |S|-1, prune pieces that cannot strictly improve
    if (have_best && s.size() < static_cast<std::size_t>(best_kappa) + 2) continue;
    if (!visited.insert(s).second) continue;  // pieces overlap in separators
    auto sub = induced(g, s);
    auto vc = vertex_connectivity(sub.graph);
    if (!have_best || vc.kappa > best_kappa) {
      have_best = true;
      best_kappa = vc.kappa;
      best_set = s;
    }
    VertexSet separator;
    if (vc.separator) {
      separator = map_to_parent(sub.to_parent, vc.separator->separator);
    } else if (sub.graph.is_clique()) {
      continue;  // nothing left to split
    }
    VertexSet remainder = s.set_difference(separator);
    if (remainder.empty()) continue;
    auto rest = induced(g, remainder);
    auto comps = connected_components(rest.graph);
    // push in reverse so the component with the smallest vertex pops first
    for (auto it = comps.rbegin(); it != comps.rend(); ++it) {
      stack.push_back(map_to_parent(rest.to_parent, *it).set_union(separator));
    }
  }
  return {best_set, best_kappa};
}

std::pair<VertexSet, Rational> most_connected_edge(const WeightedGraph& g) {
  if (g.edge_count() == 0) throw DomainError("graph has no edges");
  bool have_best = false;
  VertexSet best_set;
  Rational best_lambda(0);
  std::vector<VertexSet> stack{VertexSet::full(g.vertex_count())};
  while (!stack.empty()) {
    VertexSet s = std::move(stack.back());
    stack.pop_back();
    if (s.size() < 2) continue;
    auto sub = induced(g, s);
    auto ec = edge_connectivity(sub.graph);
    if (!have_best || best_lambda < ec.lambda) {
      have_best = true;
      best_lambda = ec.lambda;
      best_set = s;
    }
    if (s.size() == 2) continue;
    VertexSet side = map_to_parent(sub.to_parent, ec.cut.side);
    VertexSet other = s.set_difference(side);
    if (!other.empty() && (side.empty() || other.smallest() < side.smallest())) {
      std::swap(side, other);
    }
    stack.push_back(std::move(other));
    stack.push_back(std::move(side));
  }
  return {best_set, best_lambda};
}

}  // namespace danchor
