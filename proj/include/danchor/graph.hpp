#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "danchor/rational.hpp"

namespace danchor {

using VertexId = std::uint32_t;

// Undirected edge with endpoints stored as u < v.
struct Edge {
  VertexId u;
  VertexId v;
  Rational weight;
};

// Sorted, duplicate-free subset of the vertices of one graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<VertexId> members);
  static VertexSet full(VertexId n);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexId v) const;
  const std::vector<VertexId>& members() const { return members_; }
  VertexId smallest() const { return members_.front(); }

  VertexSet set_union(const VertexSet& other) const;
  VertexSet set_difference(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.members_ == b.members_;
  }
  friend bool operator!=(const VertexSet& a, const VertexSet& b) { return !(a == b); }
  // Lexicographic on the sorted member sequence.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    return a.members_ < b.members_;
  }

  std::string to_string() const;

 private:
  std::vector<VertexId> members_;
};

// Immutable simple undirected graph with positive rational edge weights.
// Vertex ids are dense 0..n-1; original labels ride along in a side table.
// Instances are safe to share across threads once constructed.
class WeightedGraph {
 public:
  WeightedGraph(VertexId n, std::vector<Edge> edges,
                std::vector<std::string> labels = {});

  VertexId vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<VertexId, Rational>>& neighbors(VertexId v) const {
    return adj_[v];
  }
  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  Rational total_weight() const { return total_weight_; }
  bool is_clique() const;

 private:
  VertexId n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<VertexId, Rational>>> adj_;
  std::vector<std::string> labels_;
  Rational total_weight_;
};

// Induced subgraph together with the map from its dense ids back to the
// parent graph's ids (graph.label() already carries the original labels).
struct InducedGraph {
  WeightedGraph graph;
  std::vector<VertexId> to_parent;
};

InducedGraph induced(const WeightedGraph& g, const VertexSet& s);

// Translate a vertex set expressed in an induced graph's ids back into the
// parent graph's ids.
VertexSet map_to_parent(const std::vector<VertexId>& to_parent, const VertexSet& s);

// Sum of edge weights with both endpoints in s.
Rational subset_weight(const WeightedGraph& g, const VertexSet& s);

// d(S) = w(S)/|S|, exact. Throws DomainError on empty s.
Rational density(const WeightedGraph& g, const VertexSet& s);
Rational density(const WeightedGraph& g);

// Weighted degree of v inside G[S]. Throws DomainError when v is not in s.
Rational weighted_degree(const WeightedGraph& g, const VertexSet& s, VertexId v);

Rational min_weighted_degree(const WeightedGraph& g, const VertexSet& s);

// (w_min, w_max) over all edges. Throws DomainError on edgeless graphs.
std::pair<Rational, Rational> extreme_weights(const WeightedGraph& g);

// Partition of V into maximal connected vertex sets, ordered by smallest
// member. Degree-0 vertices form their own singleton components.
std::vector<VertexSet> connected_components(const WeightedGraph& g);

bool is_connected(const WeightedGraph& g);

}  // namespace danchor
