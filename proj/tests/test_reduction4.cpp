#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "spanner/oracle.hpp"
#include "spanner/reduction4.hpp"
#include "test_util.hpp"

using namespace spanner;

TEST_CASE("double cover of a single edge is two disjoint edges") {
  Graph g = Graph::from_edges(2, {{0, 1}});
  DoubledGraph d = double_cover(g);
  CHECK(d.graph.vertex_count() == 4);
  CHECK(d.graph.edges() == std::vector<VertexPair>{{0, 3}, {1, 2}});
}

TEST_CASE("double cover of a triangle is a six-cycle") {
  Graph g = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  DoubledGraph d = double_cover(g);
  CHECK(d.graph.edge_count() == 6);
  CHECK(d.graph.edges() == std::vector<VertexPair>{
                               {0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}});
  // trace the cycle 0-4-2-3-1-5-0
  for (VertexId v = 0; v < 6; ++v) CHECK(d.graph.degree(v) == 2);
  auto dist = testutil::brute_distances(d.graph, 0);
  CHECK(*std::max_element(dist.begin(), dist.end()) == 3);
}

TEST_CASE("double cover of an edgeless graph") {
  Graph g = Graph::from_edges(4, {});
  DoubledGraph d = double_cover(g);
  CHECK(d.graph.vertex_count() == 8);
  CHECK(d.graph.edge_count() == 0);
}

TEST_CASE("double cover is bipartite with cross-part edges only") {
  std::mt19937_64 pick(21);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + pick() % 63;
    std::uint64_t cap = n * (n - 1) / 2;
    Graph g = generate_gnm(n, pick() % (cap + 1), pick());
    DoubledGraph d = double_cover(g);
    REQUIRE(d.graph.edge_count() == 2 * g.edge_count());
    for (const auto& [a, b] : d.graph.edges()) {
      REQUIRE(a < n);
      REQUIRE(b >= n);
      REQUIRE(b < 2 * n);
      // both orientations present, mirroring a source edge
      REQUIRE(g.has_edge(a, static_cast<VertexId>(b - n)));
      REQUIRE(d.graph.has_edge(static_cast<VertexId>(b - n),
                               static_cast<VertexId>(a + n)));
    }
  }
}

TEST_CASE("distances in the double respect part parity") {
  std::mt19937_64 pick(22);
  for (int trial = 0; trial < 8; ++trial) {
    std::size_t n = 2 + pick() % 63;
    std::uint64_t cap = n * (n - 1) / 2;
    Graph g = generate_gnm(n, pick() % (cap + 1), pick());
    DoubledGraph d = double_cover(g);
    std::size_t n2 = d.graph.vertex_count();
    for (VertexId s = 0; s < n2; ++s) {
      auto dist = testutil::brute_distances(d.graph, s);
      for (VertexId t = 0; t < n2; ++t) {
        if (dist[t] == kUnreachable) continue;
        bool same_part = (s < n) == (t < n);
        REQUIRE(dist[t] % 2 == (same_part ? 0u : 1u));
      }
    }
  }
}

TEST_CASE("projection examples") {
  CHECK(project_spanner(EdgeSet({{0, 3}}), 2) == EdgeSet({{0, 1}}));
  CHECK(project_spanner(EdgeSet({{0, 3}, {1, 2}}), 2) == EdgeSet({{0, 1}}));
  CHECK_THROWS_AS(project_spanner(EdgeSet({{0, 1}}), 2), SubgraphViolation);
  CHECK_THROWS_AS(project_spanner(EdgeSet({{1, 3}}), 2), SubgraphViolation);
}

TEST_CASE("project of the full double is the original edge set") {
  std::mt19937_64 pick(23);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + pick() % 40;
    std::uint64_t cap = n * (n - 1) / 2;
    Graph g = generate_gnm(n, pick() % (cap + 1), pick());
    DoubledGraph d = double_cover(g);
    EdgeSet projected = project_spanner(EdgeSet(d.graph.edges()), n);
    REQUIRE(projected == EdgeSet(g.edges()));
  }
}

TEST_CASE("build_4_spanner keeps trees intact") {
  Graph tree = testutil::star_graph(6);
  SpannerParams params;
  params.dense_shortcut = false;
  auto result = build_4_spanner(tree, params);
  CHECK(result.spanner_edges == EdgeSet(tree.edges()));
  CHECK(result.doubled.input_vertex_count == 14);
}

TEST_CASE("build_4_spanner certifies 4-additive stretch") {
  SpannerParams params;
  params.dense_shortcut = false;
  for (auto [n, m, seed] : {std::tuple<std::size_t, std::uint64_t,
                                       std::uint64_t>{64, 180, 9},
                            {100, 600, 1},
                            {96, 900, 12}}) {
    Graph g = generate_gnm(n, m, seed);
    auto result = build_4_spanner(g, params);
    CHECK(result.spanner_edges.size() <= m);
    auto report = verify_stretch(g, result.spanner_edges, 4);
    CHECK(report.pass);
  }
}

TEST_CASE("build_4_spanner on the empty graph") {
  auto result = build_4_spanner(Graph{});
  CHECK(result.spanner_edges.size() == 0);
}

TEST_CASE("inner thresholds resolve from the doubled vertex count") {
  Graph g = generate_gnm(64, 500, 2);
  auto result = build_4_spanner(g);
  auto expected = resolve_params({}, 128);
  CHECK(result.doubled.thresholds_used.elim_threshold ==
        expected.elim_threshold);
  CHECK(result.doubled.thresholds_used.f_threshold == expected.f_threshold);
}
