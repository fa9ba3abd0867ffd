#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "spanner/graph.hpp"
#include "spanner/reduction4.hpp"
#include "spanner/spanner5.hpp"

namespace spanner {

// Exact hop distances from every source, kUnreachable marking disconnected
// pairs. Independent of the construction code paths.
struct DistanceTable {
  std::size_t n = 0;
  std::vector<std::uint32_t> d;  // row-major n*n

  std::uint32_t at(VertexId u, VertexId v) const { return d[u * n + v]; }
};

// Refuses (CapExceeded) above the cap, which exists to keep the O(n*m)
// verification cost a deliberate choice.
DistanceTable all_pairs_distances(const Graph& g, std::size_t cap = 4096);

struct StretchReport {
  int k = 0;
  bool pass = false;
  std::int64_t max_excess = 0;  // over finite pairs
  VertexPair worst_pair{kNoVertex, kNoVertex};
  std::uint64_t pairs_checked = 0;
  // Pairs reachable in g but not in h: an unbounded violation.
  std::uint64_t infinite_pairs = 0;
  VertexPair first_infinite_pair{kNoVertex, kNoVertex};
  std::map<std::int64_t, std::uint64_t> histogram;  // excess -> pair count
};

// Certifies dist_H <= dist_G + k for every pair reachable in g; pairs
// unreachable in g are exempt. Throws SubgraphViolation when h_edges is not
// a subset of E(g).
StretchReport verify_stretch(const Graph& g, const EdgeSet& h_edges, int k);

struct EdgeBudgetReport {
  std::size_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t h_edges = 0;
  double bound = 0;           // n^{7/5} (log2 n)^{3/5}
  double ratio_to_bound = 0;
  double ratio_to_m = 0;      // 0 when m == 0
  std::array<std::uint64_t, 7> per_step{};
  bool shortcut_fired = false;
};

EdgeBudgetReport edge_budget_report(const Graph& g,
                                    const SpannerResult& result);

// Budget of the projected 4-additive spanner against the source graph;
// per-step counts come from the inner doubled run.
EdgeBudgetReport edge_budget_report(const Graph& g,
                                    const FourSpannerResult& result);

}  // namespace spanner
