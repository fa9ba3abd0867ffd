#pragma once

#include <cstdint>

#include "spanner/graph.hpp"
#include "spanner/spanner5.hpp"

namespace spanner {

// Bipartite double cover on 2n vertices: part L is [0, n), part R is
// [n, 2n); each source edge (u, v) becomes (u, v+n) and (v, u+n).
struct DoubledGraph {
  Graph graph;
  std::size_t source_vertex_count = 0;
};

DoubledGraph double_cover(const Graph& g);

// Maps doubled edges back: (u, v+n) and (v, u+n) both collapse to (u, v).
// Throws SubgraphViolation when an edge stays inside one part.
EdgeSet project_spanner(const EdgeSet& h0, std::size_t n);

struct FourSpannerResult {
  SpannerResult doubled;    // inner 5-spanner statistics, on 2n vertices
  EdgeSet spanner_edges;    // projected back onto the source graph
  std::size_t input_vertex_count = 0;
  std::uint64_t input_edge_count = 0;
  double double_millis = 0;
  double project_millis = 0;
};

// Parity of the doubled parts converts the inner 5-additive guarantee into
// a 4-additive one. Default thresholds inside resolve from 2n.
FourSpannerResult build_4_spanner(const Graph& g,
                                  const SpannerParams& params = {},
                                  unsigned threads = 1);

}  // namespace spanner
