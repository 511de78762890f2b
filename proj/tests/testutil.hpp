#pragma once

// Shared helpers for the test suites: deterministic random graphs and a few
// stock constructions.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "danchor/graph.hpp"
#include "danchor/io.hpp"

namespace danchor::testutil {

enum class WeightStyle { kUnit, kRational, kMixed };

inline Rational random_weight(std::mt19937& rng, WeightStyle style) {
  if (style == WeightStyle::kUnit) return Rational(1);
  if (style == WeightStyle::kMixed && rng() % 2 == 0) return Rational(1);
  std::uniform_int_distribution<std::int64_t> num(1, 6);
  std::uniform_int_distribution<std::int64_t> den(1, 4);
  return Rational(num(rng), den(rng));
}

// Erdos-Renyi-style graph with at least one edge.
inline WeightedGraph random_graph(std::mt19937& rng, VertexId n, double p,
                                  WeightStyle style = WeightStyle::kMixed) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng) < p) edges.push_back({u, v, random_weight(rng, style)});
    }
  }
  if (edges.empty()) {
    std::uniform_int_distribution<VertexId> pickv(0, n - 1);
    VertexId u = pickv(rng);
    VertexId v = pickv(rng);
    while (v == u) v = pickv(rng);
    edges.push_back({u, v, random_weight(rng, style)});
  }
  return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph clique(VertexId n, Rational w = Rational(1)) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v, w});
  }
  return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph path(VertexId n, Rational w = Rational(1)) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, static_cast<VertexId>(v + 1), w});
  return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph cycle(VertexId n, Rational w = Rational(1)) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) {
    edges.push_back({v, static_cast<VertexId>((v + 1) % n), w});
  }
  return WeightedGraph(n, std::move(edges));
}

// Two unit K10s sharing vertex 0: vertices {0..9} and {0,10..18}.
inline WeightedGraph two_k10_shared() {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < 10; ++u) {
    for (VertexId v = u + 1; v < 10; ++v) edges.push_back({u, v, Rational(1)});
  }
  std::vector<VertexId> second{0};
  for (VertexId v = 10; v < 19; ++v) second.push_back(v);
  for (std::size_t i = 0; i < second.size(); ++i) {
    for (std::size_t j = i + 1; j < second.size(); ++j) {
      edges.push_back({second[i], second[j], Rational(1)});
    }
  }
  return WeightedGraph(19, std::move(edges));
}

// Two unit K10s {0..9} and {10..19} joined by the bridge 9-10.
inline WeightedGraph two_k10_bridge() {
  std::vector<Edge> edges;
  for (VertexId base : {VertexId(0), VertexId(10)}) {
    for (VertexId u = base; u < base + 10; ++u) {
      for (VertexId v = u + 1; v < base + 10; ++v) {
        edges.push_back({u, v, Rational(1)});
      }
    }
  }
  edges.push_back({9, 10, Rational(1)});
  return WeightedGraph(20, std::move(edges));
}

inline WeightedGraph from_text(const std::string& text,
                               WeightMode mode = WeightMode::kAuto) {
  std::istringstream in(text);
  return load_edge_list(in, mode).graph;
}

inline VertexSet set_of(std::initializer_list<VertexId> ids) {
  return VertexSet(std::vector<VertexId>(ids));
}

}  // namespace danchor::testutil
