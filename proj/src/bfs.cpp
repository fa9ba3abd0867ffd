#include "spanner/bfs.hpp"

#include <algorithm>

#include "spanner/errors.hpp"

namespace spanner {

BfsTree bfs_tree(const ResidualGraph& g, VertexId root) {
  if (root >= g.vertex_count() || !g.alive(root)) {
    throw InvariantViolation("bfs_tree: dead root " + std::to_string(root));
  }
  std::size_t n = g.vertex_count();
  BfsTree out;
  out.dist.assign(n, kUnreachable);
  out.dist[root] = 0;
  std::vector<VertexId> queue;
  queue.reserve(64);
  queue.push_back(root);
  std::vector<VertexPair> tree_edges;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId v = queue[head];
    g.for_each_live_neighbor(v, [&](VertexId w) {
      if (out.dist[w] == kUnreachable) {
        out.dist[w] = out.dist[v] + 1;
        tree_edges.push_back(canonical_edge(v, w));
        queue.push_back(w);
      }
    });
  }
  out.edges = EdgeSet(std::move(tree_edges));
  return out;
}

DegreeMinTree degree_min_bfs_tree(const ResidualGraph& g, VertexId root,
                                  std::span<const std::uint32_t> deg) {
  if (root >= g.vertex_count() || !g.alive(root)) {
    throw InvariantViolation("degree_min_bfs_tree: dead root " +
                             std::to_string(root));
  }
  std::size_t n = g.vertex_count();
  DegreeMinTree t;
  t.root = root;
  t.parent.assign(n, kNoVertex);
  t.dist.assign(n, kUnreachable);
  t.f.assign(n, -1);
  t.s.assign(n, 0);

  std::vector<VertexId> order;  // BFS order == nondecreasing dist
  order.reserve(64);
  order.push_back(root);
  t.dist[root] = 0;
  t.parent[root] = root;
  t.f[root] = deg[root];
  for (std::size_t head = 0; head < order.size(); ++head) {
    VertexId v = order[head];
    g.for_each_live_neighbor(v, [&](VertexId w) {
      if (t.dist[w] == kUnreachable) {
        t.dist[w] = t.dist[v] + 1;
        order.push_back(w);
      }
    });
  }

  // Parents resolve per layer: every candidate parent sits one layer up and
  // already carries its final f, so a single pass in BFS order suffices.
  for (std::size_t i = 1; i < order.size(); ++i) {
    VertexId u = order[i];
    std::uint32_t want = t.dist[u] - 1;
    VertexId best = kNoVertex;
    std::int64_t best_f = 0;
    g.for_each_live_neighbor(u, [&](VertexId w) {
      if (t.dist[w] != want) return;
      if (best == kNoVertex || t.f[w] < best_f ||
          (t.f[w] == best_f && w < best)) {
        best = w;
        best_f = t.f[w];
      }
    });
    t.parent[u] = best;
    t.f[u] = best_f + deg[u];
  }

  // Subtree degree sums bottom-up (reverse BFS order).
  for (VertexId v : order) t.s[v] = deg[v];
  for (std::size_t i = order.size(); i-- > 1;) {
    VertexId u = order[i];
    t.s[t.parent[u]] += t.s[u];
  }
  return t;
}

}  // namespace spanner
