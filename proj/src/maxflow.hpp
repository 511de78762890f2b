#pragma once

// Dinic max-flow over an arbitrary totally ordered capacity type.
// Instantiated with Rational for the densest-subgraph network (exact cuts)
// and with int64 for unit-capacity vertex-connectivity networks.

#include <cstdint>
#include <queue>
#include <vector>

namespace danchor::detail {

template <typename Cap>
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t node_count)
      : head_(node_count), level_(node_count), iter_(node_count) {}

  // Adds a directed arc u->v with the given capacity (plus the zero-capacity
  // reverse arc Dinic needs).
  void add_arc(std::uint32_t u, std::uint32_t v, Cap capacity) {
    head_[u].push_back(static_cast<std::uint32_t>(arcs_.size()));
    arcs_.push_back({v, static_cast<std::uint32_t>(arcs_.size() + 1), capacity});
    head_[v].push_back(static_cast<std::uint32_t>(arcs_.size()));
    arcs_.push_back({u, static_cast<std::uint32_t>(arcs_.size() - 1), Cap(0)});
  }

  // Computes the max flow; if `limit` is positive, stops as soon as the flow
  // reaches it (used by connectivity searches that only need min(flow, bound)).
  Cap run(std::uint32_t source, std::uint32_t sink, Cap limit = Cap(0)) {
    Cap flow(0);
    bool bounded = Cap(0) < limit;
    while (bfs(source, sink)) {
      std::fill(iter_.begin(), iter_.end(), 0u);
      while (true) {
        Cap pushed = dfs(source, sink, Cap(0), true);
        if (!(Cap(0) < pushed)) break;
        flow += pushed;
        if (bounded && !(flow < limit)) return flow;
      }
    }
    return flow;
  }

  // Vertices reachable from `source` in the residual graph (the minimal
  // min-cut source side after run()).
  std::vector<char> residual_reachable(std::uint32_t source) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::uint32_t> stack{source};
    seen[source] = 1;
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      for (std::uint32_t idx : head_[v]) {
        const Arc& a = arcs_[idx];
        if (Cap(0) < a.cap && !seen[a.to]) {
          seen[a.to] = 1;
          stack.push_back(a.to);
        }
      }
    }
    return seen;
  }

  // Vertices from which `sink` is reachable in the residual graph; their
  // complement is the maximal min-cut source side after run().
  std::vector<char> residual_coreachable(std::uint32_t sink) const {
    std::vector<char> seen(head_.size(), 0);
    std::vector<std::uint32_t> stack{sink};
    seen[sink] = 1;
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      for (std::uint32_t idx : head_[v]) {
        // arcs_[idx] is v->w; w steps to v (and on to the sink) iff the
        // partner arc w->v still has residual capacity.
        std::uint32_t w = arcs_[idx].to;
        if (Cap(0) < rev_cap(idx) && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::uint32_t to;
    std::uint32_t rev;
    Cap cap;
  };

  // Residual capacity of the arc pointing *into* the node owning `idx`,
  // i.e. of the partner of arcs_[idx].
  const Cap& rev_cap(std::uint32_t idx) const { return arcs_[arcs_[idx].rev].cap; }

  bool bfs(std::uint32_t source, std::uint32_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::uint32_t> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
      std::uint32_t v = q.front();
      q.pop();
      for (std::uint32_t idx : head_[v]) {
        const Arc& a = arcs_[idx];
        if (Cap(0) < a.cap && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          q.push(a.to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  Cap dfs(std::uint32_t v, std::uint32_t sink, Cap pushed, bool unlimited) {
    if (v == sink) return pushed;
    for (std::uint32_t& i = iter_[v]; i < head_[v].size(); ++i) {
      Arc& a = arcs_[head_[v][i]];
      if (!(Cap(0) < a.cap) || level_[a.to] != level_[v] + 1) continue;
      Cap next = (unlimited || a.cap < pushed) ? a.cap : pushed;
      Cap got = dfs(a.to, sink, next, false);
      if (Cap(0) < got) {
        a.cap -= got;
        arcs_[a.rev].cap += got;
        return got;
      }
    }
    level_[v] = -1;
    return Cap(0);
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::uint32_t>> head_;
  std::vector<int> level_;
  std::vector<std::uint32_t> iter_;
};

}  // namespace danchor::detail
