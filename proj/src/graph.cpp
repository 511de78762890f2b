#include "danchor/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "danchor/error.hpp"

namespace danchor {

VertexSet::VertexSet(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::full(VertexId n) {
  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  VertexSet s;
  s.members_ = std::move(all);
  return s;
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  std::vector<VertexId> out;
  out.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
  std::vector<VertexId> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out));
  VertexSet s;
  s.members_ = std::move(out);
  return s;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) os << ',';
    os << members_[i];
  }
  os << '}';
  return os.str();
}

WeightedGraph::WeightedGraph(VertexId n, std::vector<Edge> edges,
                             std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (VertexId v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
  }
  if (labels_.size() != n_) {
    throw ValidationError("label table size does not match vertex count");
  }
  for (auto& e : edges_) {
    if (e.u == e.v) throw ValidationError("self-loop in edge list");
    if (e.u >= n_ || e.v >= n_) throw ValidationError("edge endpoint out of range");
    if (!e.weight.is_positive()) throw ValidationError("non-positive edge weight");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw ValidationError("duplicate edge in edge list");
    }
  }
  adj_.assign(n_, {});
  total_weight_ = Rational(0);
  for (const auto& e : edges_) {
    adj_[e.u].emplace_back(e.v, e.weight);
    adj_[e.v].emplace_back(e.u, e.weight);
    total_weight_ += e.weight;
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
}

bool WeightedGraph::is_clique() const {
  return edges_.size() ==
         static_cast<std::size_t>(n_) * (n_ - 1) / 2;
}

InducedGraph induced(const WeightedGraph& g, const VertexSet& s) {
  if (s.empty()) throw DomainError("induced subgraph of empty vertex set");
  std::vector<VertexId> to_parent(s.members());
  std::vector<VertexId> to_child(g.vertex_count(), 0);
  std::vector<char> in_s(g.vertex_count(), 0);
  for (std::size_t i = 0; i < to_parent.size(); ++i) {
    if (to_parent[i] >= g.vertex_count()) {
      throw DomainError("vertex set member outside graph");
    }
    to_child[to_parent[i]] = static_cast<VertexId>(i);
    in_s[to_parent[i]] = 1;
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (in_s[e.u] && in_s[e.v]) {
      edges.push_back({to_child[e.u], to_child[e.v], e.weight});
    }
  }
  std::vector<std::string> labels;
  labels.reserve(to_parent.size());
  for (VertexId p : to_parent) labels.push_back(g.label(p));
  return InducedGraph{WeightedGraph(static_cast<VertexId>(to_parent.size()),
                                    std::move(edges), std::move(labels)),
                      std::move(to_parent)};
}

VertexSet map_to_parent(const std::vector<VertexId>& to_parent, const VertexSet& s) {
  std::vector<VertexId> out;
  out.reserve(s.size());
  for (VertexId v : s) out.push_back(to_parent[v]);
  return VertexSet(std::move(out));
}

Rational subset_weight(const WeightedGraph& g, const VertexSet& s) {
  Rational total(0);
  if (s.size() == g.vertex_count()) return g.total_weight();
  for (const auto& e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) total += e.weight;
  }
  return total;
}

Rational density(const WeightedGraph& g, const VertexSet& s) {
  if (s.empty()) throw DomainError("density of empty vertex set");
  return subset_weight(g, s) / Rational(static_cast<std::int64_t>(s.size()));
}

Rational density(const WeightedGraph& g) {
  return density(g, VertexSet::full(g.vertex_count()));
}

Rational weighted_degree(const WeightedGraph& g, const VertexSet& s, VertexId v) {
  if (!s.contains(v)) throw DomainError("vertex not in subset");
  Rational total(0);
  for (const auto& [u, w] : g.neighbors(v)) {
    if (s.contains(u)) total += w;
  }
  return total;
}

Rational min_weighted_degree(const WeightedGraph& g, const VertexSet& s) {
  if (s.empty()) throw DomainError("minimum degree of empty vertex set");
  bool first = true;
  Rational best(0);
  for (VertexId v : s) {
    Rational d = weighted_degree(g, s, v);
    if (first || d < best) {
      best = d;
      first = false;
    }
  }
  return best;
}

std::pair<Rational, Rational> extreme_weights(const WeightedGraph& g) {
  if (g.edge_count() == 0) throw DomainError("extreme weights of edgeless graph");
  Rational lo = g.edges().front().weight;
  Rational hi = lo;
  for (const auto& e : g.edges()) {
    if (e.weight < lo) lo = e.weight;
    if (hi < e.weight) hi = e.weight;
  }
  return {lo, hi};
}

std::vector<VertexSet> connected_components(const WeightedGraph& g) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexSet> out;
  std::vector<VertexId> stack;
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> comp;
    stack.push_back(start);
    seen[start] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (const auto& [u, w] : g.neighbors(v)) {
        (void)w;
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  // Component discovery order is already by smallest member.
  return out;
}

bool is_connected(const WeightedGraph& g) {
  return connected_components(g).size() <= 1;
}

}  // namespace danchor
