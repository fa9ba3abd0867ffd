#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "spanner/bfs.hpp"
#include "spanner/graph.hpp"
#include "spanner/residual.hpp"

namespace spanner {

// Construction thresholds. Unset optionals resolve to the defaults
//   elim_threshold  = n^{3/5} / (log2 n)^{3/5}
//   heavy_threshold = n^{2/5} (log2 n)^{3/5}
//   f_threshold     = n^{3/5} (log2 n)^{2/5}
// with log2 floored at 1. Overrides are absolute values.
struct SpannerParams {
  std::optional<double> elim_threshold;
  std::optional<double> heavy_threshold;
  std::optional<double> f_threshold;
  double subtree_factor = 3.0;   // step-5 subtree condition uses 3F
  double shortpath_factor = 5.0; // step-7 path condition uses 5F
  bool dense_shortcut = true;
};

struct ResolvedThresholds {
  double elim_threshold = 0;
  double heavy_threshold = 0;
  double f_threshold = 0;
  double subtree_factor = 3.0;
  double shortpath_factor = 5.0;
  bool dense_shortcut = true;
};

// Validates (thresholds > 0, factors >= 1) and fills defaults from n.
// Throws InvalidParams.
ResolvedThresholds resolve_params(const SpannerParams& params, std::size_t n);

// log2(n) floored at 1; used by every threshold and claim bound.
double floored_log2(std::size_t n);

// Claim bounds asserted on every construction run.
double s1_claim_bound(std::size_t n);  // 2 n^{3/5} (log2 n)^{2/5}
double s2_claim_bound(std::size_t n);  // 12 n^{2/5} (log2 n)^{3/5}

struct SpannerResult {
  EdgeSet spanner_edges;
  std::array<std::uint64_t, 7> per_step_edge_counts{};  // steps 1..7
  std::uint64_t s1_size = 0;
  std::uint64_t s2_size = 0;
  std::uint64_t residual_edge_count = 0;  // D after step 1
  std::uint64_t elimination_rounds = 0;
  bool shortcut_fired = false;
  ResolvedThresholds thresholds_used;
  std::size_t input_vertex_count = 0;
  std::uint64_t input_edge_count = 0;
  // Wall time per step, milliseconds; index 0 is the shortcut check.
  // Excluded from serialized reports so runs stay byte-comparable.
  std::array<double, 8> step_millis{};
};

// Exact test m <= n^{7/5} (equivalently m^5 <= n^7, computed in 128-bit
// integers while representable).
bool dense_shortcut_applies(std::size_t n, std::uint64_t m);

// Step 0: when the graph is at or below the density bound, the graph itself
// is the spanner and the remaining steps are skipped.
std::optional<SpannerResult> step0_dense_shortcut(const Graph& g,
                                                  const SpannerParams& params);

struct Step1Result {
  ResidualGraph residual;
  EdgeSet edges;
  std::vector<VertexId> roots;  // elimination order
};

// Step 1: while the max live degree reaches elim_threshold, add a BFS tree
// rooted at the max-degree vertex (smallest id on ties) and delete its
// closed neighborhood.
Step1Result step1_eliminate(const Graph& g, const ResolvedThresholds& th);

// Step 2: every live edge with at least one endpoint of live degree
// strictly below heavy_threshold.
EdgeSet step2_light_edges(const ResidualGraph& rg,
                          const ResolvedThresholds& th);

struct Step3Result {
  std::vector<VertexId> s1;  // greedy selection order
  EdgeSet edges;
};

// Step 3: greedy dominating set over heavy vertices plus one attachment
// edge per dominated heavy vertex. Asserts the S1 claim bound.
Step3Result step3_dominate_heavy(const ResidualGraph& rg,
                                 const ResolvedThresholds& th);

// Step 4: one degree-minimizing BFS tree per S1 root, in S1 order.
std::vector<DegreeMinTree> step4_trees(const ResidualGraph& rg,
                                       const std::vector<VertexId>& s1,
                                       unsigned threads = 1);

// Auxiliary bipartite instance over tree-path segments.
struct AuxBipartite {
  struct RightElement {
    VertexId root;                     // v in S1
    VertexId vertex;                   // u, first f-crossing on its branch
    std::vector<VertexId> path;        // tree path v..u (diagnostics)
    std::vector<VertexId> adjacent;    // sorted live vertices adjacent to it
  };
  std::vector<VertexId> left;          // all live vertices
  std::vector<RightElement> right;
};

// Step 5: R-elements are pairs (v, u) with f_{v,u} > F,
// f_{v,parent} <= F and s_{v,u} > subtree_factor * F.
AuxBipartite step5_build_aux(const ResidualGraph& rg,
                             const std::vector<DegreeMinTree>& trees,
                             const ResolvedThresholds& th);

struct Step6Result {
  std::vector<VertexId> s2;  // greedy selection order
  EdgeSet edges;
};

// Step 6: greedy dominating set for the aux instance plus a plain BFS tree
// per member. Asserts the S2 claim bound.
Step6Result step6_dominate_paths(const ResidualGraph& rg,
                                 const AuxBipartite& aux,
                                 unsigned threads = 1);

// Step 7: tree paths between ordered S1 pairs with
// f_{v,u} <= shortpath_factor * F.
EdgeSet step7_short_paths(const std::vector<DegreeMinTree>& trees,
                          const std::vector<VertexId>& s1,
                          const ResolvedThresholds& th);

// Runs steps 0-7. threads only parallelizes per-root tree builds; it never
// changes the result.
SpannerResult build_5_spanner(const Graph& g, const SpannerParams& params = {},
                              unsigned threads = 1);

}  // namespace spanner
