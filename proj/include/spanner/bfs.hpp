#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spanner/graph.hpp"
#include "spanner/residual.hpp"

namespace spanner {

struct BfsTree {
  EdgeSet edges;                    // tree edges of root's live component
  std::vector<std::uint32_t> dist;  // hop distance, kUnreachable elsewhere
};

// Plain BFS tree over the live subgraph, neighbors scanned in sorted order.
// Throws InvariantViolation on a dead root.
BfsTree bfs_tree(const ResidualGraph& g, VertexId root);

// Shortest-path tree whose root-to-vertex paths minimize the total vertex
// degree among all shortest paths. f is the degree prefix sum along the tree
// path (root included), s the degree sum of the subtree below each vertex.
struct DegreeMinTree {
  VertexId root = kNoVertex;
  std::vector<VertexId> parent;     // root maps to itself; kNoVertex elsewhere
  std::vector<std::uint32_t> dist;  // kUnreachable off the live component
  std::vector<std::int64_t> f;      // -1 when unreachable
  std::vector<std::int64_t> s;      // 0 when unreachable

  bool reachable(VertexId v) const { return dist[v] != kUnreachable; }
};

// deg holds the live degree of every live vertex (typically
// ResidualGraph::live_degrees). Parent choice per layer minimizes
// (f of parent, parent id); that pins the whole tree deterministically.
DegreeMinTree degree_min_bfs_tree(const ResidualGraph& g, VertexId root,
                                  std::span<const std::uint32_t> deg);

}  // namespace spanner
