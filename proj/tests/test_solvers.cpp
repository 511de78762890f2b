#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "danchor/connectivity.hpp"
#include "danchor/densest.hpp"
#include "danchor/error.hpp"
#include "danchor/oracle.hpp"
#include "danchor/solvers.hpp"
#include "testutil.hpp"

using namespace danchor;
namespace tu = danchor::testutil;

TEST_CASE("bicriteria vertex on the shared double clique") {
  auto g = tu::two_k10_shared();
  auto out = bicriteria_vertex(g, 3, Rational(1));
  REQUIRE(out.feasible());
  CHECK(out.subset->size() == 10);
  CHECK(*out.density == Rational(9, 2));
  CHECK(*out.achieved_connectivity == Rational(9));
  CHECK(out.guarantee.density_ratio == Rational(1, 4));
  CHECK(out.guarantee.connectivity_ratio == Rational(1));
  CHECK(out.guarantee.method == "bicriteria-vertex");
  // deterministic tie-break: the K10 on the smaller labels
  CHECK(out.subset->contains(0));
  CHECK(out.subset->contains(9));
}

TEST_CASE("bicriteria vertex detects infeasibility") {
  auto out = bicriteria_vertex(tu::clique(5), 6, Rational(1));
  CHECK_FALSE(out.feasible());
  CHECK_FALSE(out.subset.has_value());
}

TEST_CASE("bicriteria edge on the bridged double clique") {
  auto g = tu::two_k10_bridge();
  auto out = bicriteria_edge(g, Rational(2), Rational(1));
  REQUIRE(out.feasible());
  CHECK(out.subset->size() == 10);
  CHECK(*out.density == Rational(9, 2));
  CHECK(*out.achieved_connectivity == Rational(9));
}

TEST_CASE("bicriteria edge feasible at the exact threshold") {
  // triangle with all weights 5: every cut has two edges, lambda = 10
  auto g = tu::from_text("a b 5\nb c 5\nc a 5\n");
  auto out = bicriteria_edge(g, Rational(10), Rational(1));
  REQUIRE(out.feasible());
  CHECK(out.subset->size() == 3);
  CHECK(*out.achieved_connectivity == Rational(10));
}

TEST_CASE("parameter validation") {
  auto k5 = tu::clique(5);
  CHECK_THROWS_AS(bicriteria_vertex(k5, 0, Rational(1)), ValidationError);
  CHECK_THROWS_AS(bicriteria_vertex(k5, 2, Rational(1, 2)), ValidationError);
  CHECK_THROWS_AS(bicriteria_vertex(k5, 2, Rational(3)), ValidationError);
  CHECK_THROWS_AS(bicriteria_edge(k5, Rational(0), Rational(1)), ValidationError);
  CHECK_THROWS_AS(approx_edge(k5, Rational(-1)), ValidationError);
  ProblemSpec bad{ProblemMode::kVertex, Rational(3, 2), Rational(1)};
  CHECK_THROWS_AS(solve(k5, bad, true), ValidationError);
}

TEST_CASE("ordinary vertex solver") {
  auto k4 = tu::clique(4);
  auto out = approx_vertex(k4, 3);
  REQUIRE(out.feasible());
  CHECK(out.subset == VertexSet::full(4));
  CHECK(*out.achieved_connectivity == Rational(3));
  CHECK(out.guarantee.method == "matula-vertex");

  auto p5 = tu::path(5);
  CHECK_FALSE(approx_vertex(p5, 2).feasible());
}

TEST_CASE("ordinary edge solver") {
  auto tri = tu::from_text("a b 1\nb c 2\nc a 3\n");
  auto out = approx_edge(tri, Rational(3));
  REQUIRE(out.feasible());
  CHECK(Rational(3) <= *out.achieved_connectivity);

  CHECK_FALSE(approx_edge(tu::clique(5), Rational(5)).feasible());
}

TEST_CASE("feasibility matches brute force exactly") {
  std::mt19937 rng(701);
  for (int trial = 0; trial < 60; ++trial) {
    auto g = tu::random_graph(rng, 9, 0.45, tu::WeightStyle::kMixed);
    oracle::Analysis an(g);
    for (std::int64_t k = 1; k <= 4; ++k) {
      ProblemSpec vspec{ProblemMode::kVertex, Rational(k), Rational(1)};
      bool oracle_feasible = an.problem(vspec).feasible();
      CHECK(bicriteria_vertex(g, k, Rational(1)).feasible() == oracle_feasible);
      CHECK(approx_vertex(g, k).feasible() == oracle_feasible);
    }
    for (Rational k : {Rational(1), Rational(3, 2), Rational(5, 2)}) {
      ProblemSpec espec{ProblemMode::kEdge, k, Rational(1)};
      bool oracle_feasible = an.problem(espec).feasible();
      CHECK(bicriteria_edge(g, k, Rational(1)).feasible() == oracle_feasible);
      CHECK(approx_edge(g, k).feasible() == oracle_feasible);
    }
  }
}

TEST_CASE("bicriteria bounds hold against the brute-force optimum") {
  std::mt19937 rng(719);
  const std::vector<Rational> gammas{Rational(1), Rational(3, 2), Rational(2)};
  int feasible_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto g = tu::random_graph(rng, 8, 0.5, tu::WeightStyle::kMixed);
    auto [w_min, w_max] = extreme_weights(g);
    oracle::Analysis an(g);
    for (std::int64_t k = 1; k <= 3; ++k) {
      ProblemSpec vspec{ProblemMode::kVertex, Rational(k), Rational(1)};
      auto opt = an.problem(vspec);
      if (!opt.feasible()) continue;
      ++feasible_seen;
      for (const auto& gamma : gammas) {
        auto out = bicriteria_vertex(g, k, gamma);
        REQUIRE(out.feasible());
        CHECK(gamma / Rational(4) * w_min / w_max * *opt.density <= *out.density);
        CHECK(Rational(k) / gamma <= *out.achieved_connectivity);
        // re-verify the achieved connectivity independently
        auto sub = induced(g, *out.subset);
        CHECK(Rational(oracle::brute_kappa(sub.graph)) ==
              *out.achieved_connectivity);
      }
    }
  }
  CHECK(feasible_seen >= 50);
}

TEST_CASE("bicriteria edge bounds hold against the brute-force optimum") {
  std::mt19937 rng(733);
  const std::vector<Rational> gammas{Rational(1), Rational(3, 2), Rational(2)};
  int feasible_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto g = tu::random_graph(rng, 8, 0.5, tu::WeightStyle::kMixed);
    auto [w_min, w_max] = extreme_weights(g);
    oracle::Analysis an(g);
    for (Rational k : {Rational(1), Rational(3, 2), Rational(2)}) {
      ProblemSpec espec{ProblemMode::kEdge, k, Rational(1)};
      auto opt = an.problem(espec);
      if (!opt.feasible()) continue;
      ++feasible_seen;
      for (const auto& gamma : gammas) {
        auto out = bicriteria_edge(g, k, gamma);
        REQUIRE(out.feasible());
        CHECK(gamma / Rational(4) * w_min / w_max * *opt.density <= *out.density);
        CHECK(k / gamma <= *out.achieved_connectivity);
        auto sub = induced(g, *out.subset);
        CHECK(oracle::brute_lambda(sub.graph) == *out.achieved_connectivity);
      }
    }
  }
  CHECK(feasible_seen >= 50);
}

TEST_CASE("half-approximation whenever the extraction branch wins") {
  std::mt19937 rng(739);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = tu::random_graph(rng, 8, 0.5, tu::WeightStyle::kMixed);
    oracle::Analysis an(g);
    for (std::int64_t k = 1; k <= 3; ++k) {
      SolverTrace trace;
      auto out = bicriteria_vertex(g, k, Rational(1), &trace);
      if (!out.feasible()) continue;
      for (const auto& cand : trace.candidates) {
        if (!cand.branch_taken) continue;
        if (density(g, cand.chosen) != *out.density) continue;  // not the winner
        // the winner came from the extraction branch: compare to the
        // constrained optimum inside its component
        auto sub = induced(g, cand.component);
        ProblemSpec vspec{ProblemMode::kVertex, Rational(k), Rational(1)};
        auto local_opt = oracle::brute_problem(sub.graph, vspec);
        REQUIRE(local_opt.feasible());
        CHECK(*local_opt.density <= *out.density * Rational(2));
      }
    }
  }
}

TEST_CASE("ordinary bounds hold against the brute-force optimum") {
  std::mt19937 rng(743);
  int feasible_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto g = tu::random_graph(rng, 8, 0.5, tu::WeightStyle::kMixed);
    auto [w_min, w_max] = extreme_weights(g);
    oracle::Analysis an(g);
    for (std::int64_t k = 1; k <= 3; ++k) {
      ProblemSpec vspec{ProblemMode::kVertex, Rational(k), Rational(1)};
      auto opt = an.problem(vspec);
      auto out = approx_vertex(g, k);
      CHECK(out.feasible() == opt.feasible());
      if (!opt.feasible()) continue;
      ++feasible_seen;
      CHECK(Rational(6, 19) * w_min / w_max * *opt.density <= *out.density);
      CHECK(Rational(k) <= *out.achieved_connectivity);
    }
    for (Rational k : {Rational(1), Rational(2)}) {
      ProblemSpec espec{ProblemMode::kEdge, k, Rational(1)};
      auto opt = an.problem(espec);
      auto out = approx_edge(g, k);
      CHECK(out.feasible() == opt.feasible());
      if (!opt.feasible()) continue;
      CHECK(Rational(6, 19) * w_min / w_max * *opt.density <= *out.density);
      CHECK(k <= *out.achieved_connectivity);
    }
  }
  CHECK(feasible_seen >= 40);
}

TEST_CASE("dense unweighted graphs contain highly connected subgraphs") {
  // |V| >= 5t/2 and |E| > (19/12)t(|V|-t) force a (t+1)-connected subgraph
  std::mt19937 rng(761);
  for (int t : {2, 3}) {
    for (int trial = 0; trial < 12; ++trial) {
      VertexId n = static_cast<VertexId>(3 * t + 2 + static_cast<int>(rng() % 4));
      std::int64_t needed =
          (Rational(19, 12) * Rational(t) * Rational(n - t)).floor() + 1;
      std::vector<std::pair<VertexId, VertexId>> all_pairs;
      for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
      }
      if (static_cast<std::size_t>(needed) > all_pairs.size()) continue;
      std::shuffle(all_pairs.begin(), all_pairs.end(), rng);
      std::vector<Edge> edges;
      for (std::int64_t i = 0; i < needed; ++i) {
        edges.push_back({all_pairs[i].first, all_pairs[i].second, Rational(1)});
      }
      WeightedGraph g(n, std::move(edges));
      auto [subset, kappa] = most_connected_vertex(g);
      (void)subset;
      CHECK(kappa >= static_cast<std::uint32_t>(t + 1));
    }
  }
}

TEST_CASE("gamma = 1 outputs are genuinely k-connected") {
  std::mt19937 rng(769);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = tu::random_graph(rng, 9, 0.5, tu::WeightStyle::kMixed);
    for (std::int64_t k = 1; k <= 3; ++k) {
      auto out = bicriteria_vertex(g, k, Rational(1));
      if (!out.feasible()) continue;
      auto sub = induced(g, *out.subset);
      CHECK(vertex_connectivity(sub.graph).kappa >= static_cast<std::uint32_t>(k));
      CHECK(out.subset->size() >= 2);
    }
  }
}

TEST_CASE("disconnected inputs are solved per component") {
  // dense triangle in one component, K4 in the other
  auto g = tu::from_text("a b 3\nb c 3\nc a 3\np q\np r\np s\nq r\nq s\nr s\n");
  auto out = bicriteria_edge(g, Rational(2), Rational(1));
  REQUIRE(out.feasible());
  CHECK(*out.density == Rational(3));  // the heavy triangle wins
}

TEST_CASE("edge mode with k = 1 accepts any connected piece") {
  auto p3 = tu::path(3);
  auto out = bicriteria_edge(p3, Rational(1), Rational(1));
  REQUIRE(out.feasible());
  CHECK(out.subset->size() >= 2);
}

TEST_CASE("solver results are deterministic across thread counts") {
  std::mt19937 rng(787);
  auto g = tu::random_graph(rng, 10, 0.45, tu::WeightStyle::kMixed);
  auto a = bicriteria_vertex(g, 2, Rational(3, 2));
  auto b = bicriteria_vertex(g, 2, Rational(3, 2));
  REQUIRE(a.feasible() == b.feasible());
  if (a.feasible()) {
    CHECK(*a.subset == *b.subset);
    CHECK(*a.density == *b.density);
  }
}
