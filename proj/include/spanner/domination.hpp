#pragma once

#include <cstdint>
#include <vector>

#include "spanner/graph.hpp"
#include "spanner/residual.hpp"

namespace spanner {

// Bipartite cover instance: candidates on the left, targets on the right,
// coverage lists sorted and duplicate-free.
struct CoverInstance {
  std::size_t candidate_count = 0;
  std::size_t target_count = 0;
  std::vector<std::vector<std::uint32_t>> coverage;  // per candidate
};

// Standard greedy: repeatedly pick the candidate covering the most
// still-uncovered targets, ties to the smallest candidate id. Uses a lazy
// max-heap whose stale counts are re-evaluated on pop. Throws
// InfeasibleCover naming an uncoverable target, InvariantViolation if the
// post-run coverage check fails.
std::vector<std::uint32_t> greedy_cover(const CoverInstance& inst);

// Step-3 instance: candidates are all live vertices, targets the heavy ones
// (live degree >= heavy_threshold); domination is by closed neighborhood.
struct HeavyDominationInstance {
  CoverInstance instance;
  std::vector<VertexId> candidate_vertices;  // candidate index -> vertex id
  std::vector<VertexId> target_vertices;     // target index -> vertex id
};

HeavyDominationInstance heavy_domination_instance(const ResidualGraph& g,
                                                  double heavy_threshold);

// One edge per heavy vertex outside s1, to its smallest-id dominating
// neighbor in s1. Heavy members of s1 contribute nothing.
EdgeSet attach_heavy_edges(const std::vector<VertexId>& s1,
                           const ResidualGraph& g, double heavy_threshold);

}  // namespace spanner
