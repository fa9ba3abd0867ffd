#include "spanner/spanner5.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "spanner/domination.hpp"
#include "spanner/errors.hpp"

namespace spanner {

double floored_log2(std::size_t n) {
  if (n < 2) return 1.0;
  return std::max(1.0, std::log2(static_cast<double>(n)));
}

double s1_claim_bound(std::size_t n) {
  return 2.0 * std::pow(static_cast<double>(n), 0.6) *
         std::pow(floored_log2(n), 0.4);
}

double s2_claim_bound(std::size_t n) {
  return 12.0 * std::pow(static_cast<double>(n), 0.4) *
         std::pow(floored_log2(n), 0.6);
}

ResolvedThresholds resolve_params(const SpannerParams& params, std::size_t n) {
  double nd = static_cast<double>(n);
  double lg = floored_log2(n);
  ResolvedThresholds th;
  th.elim_threshold =
      params.elim_threshold.value_or(std::pow(nd, 0.6) / std::pow(lg, 0.6));
  th.heavy_threshold =
      params.heavy_threshold.value_or(std::pow(nd, 0.4) * std::pow(lg, 0.6));
  th.f_threshold =
      params.f_threshold.value_or(std::pow(nd, 0.6) * std::pow(lg, 0.4));
  th.subtree_factor = params.subtree_factor;
  th.shortpath_factor = params.shortpath_factor;
  th.dense_shortcut = params.dense_shortcut;
  if (n > 0) {
    if (!(th.elim_threshold > 0) || !(th.heavy_threshold > 0) ||
        !(th.f_threshold > 0)) {
      throw InvalidParams("thresholds must be positive");
    }
  }
  if (!(th.subtree_factor >= 1.0) || !(th.shortpath_factor >= 1.0)) {
    throw InvalidParams("factors must be >= 1");
  }
  return th;
}

namespace {

using u128 = unsigned __int128;

// x^e saturating at the 128-bit limit; second member reports saturation.
std::pair<u128, bool> saturating_pow(std::uint64_t x, unsigned e) {
  constexpr u128 kMax = ~u128{0};
  u128 acc = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (x != 0 && acc > kMax / x) return {kMax, true};
    acc *= x;
  }
  return {acc, false};
}

class StepTimer {
 public:
  explicit StepTimer(double& slot)
      : slot_(&slot), start_(std::chrono::steady_clock::now()) {}
  ~StepTimer() {
    auto end = std::chrono::steady_clock::now();
    *slot_ = std::chrono::duration<double, std::milli>(end - start_).count();
  }

 private:
  double* slot_;
  std::chrono::steady_clock::time_point start_;
};

// Runs fn(i) for i in [0, count) across the given worker count. Work is
// partitioned by index, so results are placement-deterministic.
template <typename Fn>
void parallel_for_index(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  unsigned workers = std::min<std::size_t>(threads, count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

bool dense_shortcut_applies(std::size_t n, std::uint64_t m) {
  // m <= n^{7/5}  <=>  m^5 <= n^7 over the nonnegative integers.
  auto [m5, m5_sat] = saturating_pow(m, 5);
  auto [n7, n7_sat] = saturating_pow(n, 7);
  if (!m5_sat && !n7_sat) return m5 <= n7;
  if (m5_sat && !n7_sat) return false;
  if (!m5_sat && n7_sat) return true;
  return std::pow(static_cast<double>(m), 5.0 / 7.0) <=
         static_cast<double>(n);
}

std::optional<SpannerResult> step0_dense_shortcut(const Graph& g,
                                                  const SpannerParams& params) {
  if (!params.dense_shortcut ||
      !dense_shortcut_applies(g.vertex_count(), g.edge_count())) {
    return std::nullopt;
  }
  SpannerResult result;
  result.spanner_edges = EdgeSet(g.edges());
  result.shortcut_fired = true;
  result.residual_edge_count = g.edge_count();
  result.thresholds_used = resolve_params(params, g.vertex_count());
  result.input_vertex_count = g.vertex_count();
  result.input_edge_count = g.edge_count();
  return result;
}

Step1Result step1_eliminate(const Graph& g, const ResolvedThresholds& th) {
  Step1Result out{ResidualGraph(g), EdgeSet{}, {}};
  std::size_t n = g.vertex_count();
  for (;;) {
    VertexId best = kNoVertex;
    std::uint32_t best_deg = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (out.residual.alive(v) && (best == kNoVertex ||
                                    out.residual.live_degree(v) > best_deg)) {
        best = v;
        best_deg = out.residual.live_degree(v);
      }
    }
    if (best == kNoVertex ||
        static_cast<double>(best_deg) < th.elim_threshold) {
      break;
    }
    out.edges.merge(bfs_tree(out.residual, best).edges);
    out.residual.delete_closed_neighborhood(best);
    out.roots.push_back(best);
  }
  return out;
}

EdgeSet step2_light_edges(const ResidualGraph& rg,
                          const ResolvedThresholds& th) {
  EdgeSet out;
  for (VertexId u = 0; u < rg.vertex_count(); ++u) {
    if (!rg.alive(u) ||
        static_cast<double>(rg.live_degree(u)) >= th.heavy_threshold) {
      continue;
    }
    rg.for_each_live_neighbor(u, [&](VertexId w) { out.add(u, w); });
  }
  return out;
}

Step3Result step3_dominate_heavy(const ResidualGraph& rg,
                                 const ResolvedThresholds& th) {
  auto inst = heavy_domination_instance(rg, th.heavy_threshold);
  auto picks = greedy_cover(inst.instance);
  Step3Result out;
  out.s1.reserve(picks.size());
  for (std::uint32_t c : picks) out.s1.push_back(inst.candidate_vertices[c]);
  std::size_t n = rg.base().vertex_count();
  if (static_cast<double>(out.s1.size()) > s1_claim_bound(n) + 1e-9) {
    throw InvariantViolation(
        "|S1| = " + std::to_string(out.s1.size()) +
        " exceeds the claim bound 2 n^{3/5} (log2 n)^{2/5} = " +
        std::to_string(s1_claim_bound(n)));
  }
  out.edges = attach_heavy_edges(out.s1, rg, th.heavy_threshold);
  return out;
}

std::vector<DegreeMinTree> step4_trees(const ResidualGraph& rg,
                                       const std::vector<VertexId>& s1,
                                       unsigned threads) {
  std::vector<DegreeMinTree> trees(s1.size());
  parallel_for_index(s1.size(), threads, [&](std::size_t i) {
    trees[i] = degree_min_bfs_tree(rg, s1[i], rg.live_degrees());
  });
  return trees;
}

AuxBipartite step5_build_aux(const ResidualGraph& rg,
                             const std::vector<DegreeMinTree>& trees,
                             const ResolvedThresholds& th) {
  AuxBipartite aux;
  for (VertexId v = 0; v < rg.vertex_count(); ++v) {
    if (rg.alive(v)) aux.left.push_back(v);
  }
  double big_f = th.f_threshold;
  double subtree_cut = th.subtree_factor * big_f;
  for (const DegreeMinTree& t : trees) {
    VertexId root = t.root;
    if (static_cast<double>(t.f[root]) > big_f) {
      // With the elimination ceiling in effect the root can never cross F;
      // R-paths therefore always have >= 2 vertices.
      throw InvariantViolation(
          "deg(root " + std::to_string(root) +
          ") exceeds the f threshold; elimination ceiling not in effect");
    }
    for (VertexId u = 0; u < rg.vertex_count(); ++u) {
      if (u == root || !t.reachable(u)) continue;
      if (static_cast<double>(t.f[u]) <= big_f) continue;
      if (static_cast<double>(t.f[t.parent[u]]) > big_f) continue;
      if (static_cast<double>(t.s[u]) <= subtree_cut) continue;
      AuxBipartite::RightElement elem;
      elem.root = root;
      elem.vertex = u;
      for (VertexId x = u;; x = t.parent[x]) {
        elem.path.push_back(x);
        if (x == root) break;
      }
      std::reverse(elem.path.begin(), elem.path.end());
      for (VertexId p : elem.path) {
        rg.for_each_live_neighbor(p, [&](VertexId w) {
          elem.adjacent.push_back(w);
        });
      }
      std::sort(elem.adjacent.begin(), elem.adjacent.end());
      elem.adjacent.erase(
          std::unique(elem.adjacent.begin(), elem.adjacent.end()),
          elem.adjacent.end());
      aux.right.push_back(std::move(elem));
    }
  }
  return aux;
}

Step6Result step6_dominate_paths(const ResidualGraph& rg,
                                 const AuxBipartite& aux,
                                 unsigned threads) {
  std::vector<std::uint32_t> candidate_index(rg.vertex_count(), kNoVertex);
  for (std::size_t i = 0; i < aux.left.size(); ++i) {
    candidate_index[aux.left[i]] = static_cast<std::uint32_t>(i);
  }
  CoverInstance inst;
  inst.candidate_count = aux.left.size();
  inst.target_count = aux.right.size();
  inst.coverage.resize(inst.candidate_count);
  for (std::uint32_t j = 0; j < aux.right.size(); ++j) {
    for (VertexId x : aux.right[j].adjacent) {
      inst.coverage[candidate_index[x]].push_back(j);
    }
  }
  auto picks = greedy_cover(inst);

  Step6Result out;
  out.s2.reserve(picks.size());
  for (std::uint32_t c : picks) out.s2.push_back(aux.left[c]);
  std::size_t n = rg.base().vertex_count();
  if (static_cast<double>(out.s2.size()) > s2_claim_bound(n) + 1e-9) {
    throw InvariantViolation(
        "|S2| = " + std::to_string(out.s2.size()) +
        " exceeds the claim bound 12 n^{2/5} (log2 n)^{3/5} = " +
        std::to_string(s2_claim_bound(n)));
  }
  std::vector<EdgeSet> tree_edges(out.s2.size());
  parallel_for_index(out.s2.size(), threads, [&](std::size_t i) {
    tree_edges[i] = bfs_tree(rg, out.s2[i]).edges;
  });
  for (const EdgeSet& e : tree_edges) out.edges.merge(e);
  return out;
}

EdgeSet step7_short_paths(const std::vector<DegreeMinTree>& trees,
                          const std::vector<VertexId>& s1,
                          const ResolvedThresholds& th) {
  EdgeSet out;
  double cut = th.shortpath_factor * th.f_threshold;
  for (std::size_t i = 0; i < trees.size(); ++i) {
    const DegreeMinTree& t = trees[i];
    for (VertexId u : s1) {
      if (u == s1[i] || !t.reachable(u)) continue;
      if (static_cast<double>(t.f[u]) > cut) continue;
      for (VertexId x = u; x != t.root; x = t.parent[x]) {
        out.add(x, t.parent[x]);
      }
    }
  }
  return out;
}

SpannerResult build_5_spanner(const Graph& g, const SpannerParams& params,
                              unsigned threads) {
  auto shortcut_start = std::chrono::steady_clock::now();
  auto shortcut = step0_dense_shortcut(g, params);
  double shortcut_millis = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() -
                               shortcut_start)
                               .count();
  if (shortcut) {
    shortcut->step_millis[0] = shortcut_millis;
    return std::move(*shortcut);
  }
  SpannerResult result;
  result.step_millis[0] = shortcut_millis;
  result.thresholds_used = resolve_params(params, g.vertex_count());
  result.input_vertex_count = g.vertex_count();
  result.input_edge_count = g.edge_count();
  const ResolvedThresholds& th = result.thresholds_used;

  std::optional<Step1Result> step1;
  {
    StepTimer timer(result.step_millis[1]);
    step1.emplace(step1_eliminate(g, th));
    result.per_step_edge_counts[0] = step1->edges.size();
    result.elimination_rounds = step1->roots.size();
    result.residual_edge_count = step1->residual.live_edge_count();
  }
  const ResidualGraph& rg = step1->residual;

  EdgeSet light;
  {
    StepTimer timer(result.step_millis[2]);
    light = step2_light_edges(rg, th);
    result.per_step_edge_counts[1] = light.size();
  }

  std::optional<Step3Result> step3;
  {
    StepTimer timer(result.step_millis[3]);
    step3.emplace(step3_dominate_heavy(rg, th));
    result.s1_size = step3->s1.size();
    result.per_step_edge_counts[2] = step3->edges.size();
  }

  std::vector<DegreeMinTree> trees;
  {
    StepTimer timer(result.step_millis[4]);
    trees = step4_trees(rg, step3->s1, threads);
  }

  AuxBipartite aux;
  {
    StepTimer timer(result.step_millis[5]);
    aux = step5_build_aux(rg, trees, th);
  }

  std::optional<Step6Result> step6;
  {
    StepTimer timer(result.step_millis[6]);
    step6.emplace(step6_dominate_paths(rg, aux, threads));
    result.s2_size = step6->s2.size();
    result.per_step_edge_counts[5] = step6->edges.size();
  }

  EdgeSet short_paths;
  {
    StepTimer timer(result.step_millis[7]);
    short_paths = step7_short_paths(trees, step3->s1, th);
    result.per_step_edge_counts[6] = short_paths.size();
  }

  result.spanner_edges.merge(step1->edges);
  result.spanner_edges.merge(light);
  result.spanner_edges.merge(step3->edges);
  result.spanner_edges.merge(step6->edges);
  result.spanner_edges.merge(short_paths);
  result.spanner_edges.size();  // force canonical form
  return result;
}

}  // namespace spanner
