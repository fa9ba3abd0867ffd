#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <numeric>

#include "spanner/bfs.hpp"
#include "spanner/graph.hpp"
#include "spanner/residual.hpp"
#include "test_util.hpp"

using namespace spanner;
using testutil::cycle_graph;
using testutil::path_graph;

TEST_CASE("bfs tree on a path is the path") {
  Graph g = path_graph(3);
  ResidualGraph rg(g);
  BfsTree t = bfs_tree(rg, 0);
  CHECK(t.edges == EdgeSet({{0, 1}, {1, 2}}));
  CHECK(t.dist == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("bfs tree on C4 follows sorted-order scanning") {
  Graph g = cycle_graph(4);
  ResidualGraph rg(g);
  BfsTree t = bfs_tree(rg, 0);
  // Vertex 2 is discovered from 1, not 3: 1 enters the queue first.
  CHECK(t.edges == EdgeSet({{0, 1}, {0, 3}, {1, 2}}));
  CHECK(t.dist == std::vector<std::uint32_t>{0, 1, 2, 1});
}

TEST_CASE("bfs tree from an isolated root") {
  Graph g = Graph::from_edges(3, {{1, 2}});
  ResidualGraph rg(g);
  BfsTree t = bfs_tree(rg, 0);
  CHECK(t.edges.size() == 0);
  CHECK(t.dist[0] == 0);
  CHECK(t.dist[1] == kUnreachable);
  CHECK(t.dist[2] == kUnreachable);
}

TEST_CASE("bfs tree rejects a dead root") {
  Graph g = path_graph(4);
  ResidualGraph rg(g);
  rg.delete_closed_neighborhood(1);  // kills 0,1,2
  CHECK_THROWS_AS(bfs_tree(rg, 0), InvariantViolation);
  CHECK_NOTHROW(bfs_tree(rg, 3));
}

TEST_CASE("degree-min tree on a path: forced arithmetic") {
  Graph g = path_graph(3);
  ResidualGraph rg(g);
  DegreeMinTree t = degree_min_bfs_tree(rg, 0, rg.live_degrees());
  CHECK(t.f == std::vector<std::int64_t>{1, 3, 4});
  CHECK(t.s == std::vector<std::int64_t>{4, 3, 1});
  CHECK(t.parent == std::vector<VertexId>{0, 0, 1});
}

TEST_CASE("degree-min tree picks the lighter shortest parent") {
  // 4-cycle 0-1-2-3-0 plus pendant 4 on vertex 1. Degrees 2,3,2,2,1.
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4}});
  ResidualGraph rg(g);
  DegreeMinTree t = degree_min_bfs_tree(rg, 0, rg.live_degrees());
  // Vertex 2 could hang under 1 (f=5) or 3 (f=4); 3 wins.
  CHECK(t.parent[2] == 3);
  CHECK(t.f[2] == 6);
  CHECK(t.f == std::vector<std::int64_t>{2, 5, 6, 4, 6});
  CHECK(t.dist == std::vector<std::uint32_t>{0, 1, 2, 1, 2});
}

TEST_CASE("degree-min tree ties break to the smaller parent id") {
  // Diamond: 0-1, 0-2, 1-3, 2-3 with equal degrees everywhere.
  Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  ResidualGraph rg(g);
  DegreeMinTree t = degree_min_bfs_tree(rg, 0, rg.live_degrees());
  CHECK(t.f[1] == t.f[2]);
  CHECK(t.parent[3] == 1);
}

TEST_CASE("degree-min dist always equals plain bfs dist") {
  std::mt19937_64 pick(31);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + pick() % 63;
    std::uint64_t cap = n * (n - 1) / 2;
    Graph g = generate_gnm(n, pick() % (cap + 1), pick());
    ResidualGraph rg(g);
    for (VertexId root = 0; root < n; ++root) {
      BfsTree plain = bfs_tree(rg, root);
      DegreeMinTree t = degree_min_bfs_tree(rg, root, rg.live_degrees());
      REQUIRE(t.dist == plain.dist);
    }
  }
}

TEST_CASE("f equals the tree-path degree sum, s sums the component") {
  std::mt19937_64 pick(77);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + pick() % 14;
    std::uint64_t cap = n * (n - 1) / 2;
    Graph g = generate_gnm(n, pick() % (cap + 1), pick());
    ResidualGraph rg(g);
    auto deg = rg.live_degrees();
    for (VertexId root = 0; root < n; ++root) {
      DegreeMinTree t = degree_min_bfs_tree(rg, root, deg);
      std::int64_t component_deg = 0;
      for (VertexId u = 0; u < n; ++u) {
        if (!t.reachable(u)) {
          REQUIRE(t.f[u] == -1);
          continue;
        }
        component_deg += deg[u];
        std::int64_t walked = 0;
        VertexId x = u;
        for (;;) {
          walked += deg[x];
          if (x == root) break;
          REQUIRE(t.dist[t.parent[x]] + 1 == t.dist[x]);
          x = t.parent[x];
        }
        REQUIRE(walked == t.f[u]);
      }
      REQUIRE(t.s[root] == component_deg);
    }
  }
}

TEST_CASE("f matches the brute-force minimum over all shortest paths") {
  std::mt19937_64 pick(13);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + pick() % 9;  // n <= 10
    std::uint64_t cap = n * (n - 1) / 2;
    Graph g = generate_gnm(n, pick() % (cap + 1), pick());
    ResidualGraph rg(g);
    for (VertexId root = 0; root < n; ++root) {
      DegreeMinTree t = degree_min_bfs_tree(rg, root, rg.live_degrees());
      auto best = testutil::brute_min_degree_sum(g, root);
      for (VertexId u = 0; u < n; ++u) {
        REQUIRE(t.f[u] == best[u]);
      }
    }
  }
}

TEST_CASE("residual deletion bookkeeping") {
  Graph g = cycle_graph(6);
  ResidualGraph rg(g);
  CHECK(rg.live_edge_count() == 6);
  auto victims = rg.delete_closed_neighborhood(0);
  CHECK(victims == std::vector<VertexId>{0, 1, 5});
  CHECK(rg.live_edge_count() == 2);  // 2-3, 3-4
  CHECK(rg.live_degree(2) == 1);
  CHECK(rg.live_degree(3) == 2);
  CHECK(rg.live_degree(4) == 1);
  CHECK(rg.live_vertex_count() == 3);
}
