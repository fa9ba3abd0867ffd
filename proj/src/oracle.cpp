#include "spanner/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "spanner/errors.hpp"

namespace spanner {

namespace {

// Plain single-source BFS over the base adjacency, written against Graph
// directly so verification shares nothing with the construction path.
void bfs_row(const Graph& g, VertexId source, std::vector<std::uint32_t>& dist,
             std::vector<VertexId>& queue) {
  dist.assign(g.vertex_count(), kUnreachable);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId v = queue[head];
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

DistanceTable all_pairs_distances(const Graph& g, std::size_t cap) {
  std::size_t n = g.vertex_count();
  if (n > cap) {
    throw CapExceeded("all_pairs_distances: n = " + std::to_string(n) +
                      " exceeds the verification cap " + std::to_string(cap) +
                      "; raise the cap to force");
  }
  DistanceTable table;
  table.n = n;
  table.d.resize(n * n);
  std::vector<std::uint32_t> row;
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    bfs_row(g, s, row, queue);
    std::copy(row.begin(), row.end(), table.d.begin() + s * n);
  }
  return table;
}

StretchReport verify_stretch(const Graph& g, const EdgeSet& h_edges, int k) {
  for (const auto& [u, v] : h_edges.edges()) {
    if (!g.has_edge(u, v)) {
      throw SubgraphViolation("spanner edge (" + std::to_string(u) + ", " +
                              std::to_string(v) +
                              ") is not an edge of the input graph");
    }
  }
  std::size_t n = g.vertex_count();
  Graph h = Graph::from_edges(
      n, {h_edges.edges().begin(), h_edges.edges().end()});

  StretchReport report;
  report.k = k;
  std::vector<std::uint32_t> dist_g, dist_h;
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    bfs_row(g, s, dist_g, queue);
    bfs_row(h, s, dist_h, queue);
    for (VertexId t = s + 1; t < n; ++t) {
      if (dist_g[t] == kUnreachable) continue;  // exempt
      ++report.pairs_checked;
      if (dist_h[t] == kUnreachable) {
        if (report.infinite_pairs == 0) report.first_infinite_pair = {s, t};
        ++report.infinite_pairs;
        continue;
      }
      std::int64_t excess = static_cast<std::int64_t>(dist_h[t]) -
                            static_cast<std::int64_t>(dist_g[t]);
      ++report.histogram[excess];
      if (excess > report.max_excess ||
          report.worst_pair.first == kNoVertex) {
        report.max_excess = excess;
        report.worst_pair = {s, t};
      }
    }
  }
  report.pass =
      report.infinite_pairs == 0 && report.max_excess <= static_cast<std::int64_t>(k);
  return report;
}

EdgeBudgetReport edge_budget_report(const Graph& g,
                                    const SpannerResult& result) {
  EdgeBudgetReport report;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.h_edges = result.spanner_edges.size();
  report.bound = std::pow(static_cast<double>(report.n), 1.4) *
                 std::pow(floored_log2(report.n), 0.6);
  report.ratio_to_bound =
      report.bound > 0 ? static_cast<double>(report.h_edges) / report.bound : 0;
  report.ratio_to_m =
      report.m > 0 ? static_cast<double>(report.h_edges) /
                         static_cast<double>(report.m)
                   : 0;
  report.per_step = result.per_step_edge_counts;
  report.shortcut_fired = result.shortcut_fired;
  return report;
}

EdgeBudgetReport edge_budget_report(const Graph& g,
                                    const FourSpannerResult& result) {
  EdgeBudgetReport report;
  report.n = g.vertex_count();
  report.m = g.edge_count();
  report.h_edges = result.spanner_edges.size();
  report.bound = std::pow(static_cast<double>(report.n), 1.4) *
                 std::pow(floored_log2(report.n), 0.6);
  report.ratio_to_bound =
      report.bound > 0 ? static_cast<double>(report.h_edges) / report.bound : 0;
  report.ratio_to_m =
      report.m > 0 ? static_cast<double>(report.h_edges) /
                         static_cast<double>(report.m)
                   : 0;
  report.per_step = result.doubled.per_step_edge_counts;
  report.shortcut_fired = result.doubled.shortcut_fired;
  return report;
}

}  // namespace spanner
