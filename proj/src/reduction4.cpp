#include "spanner/reduction4.hpp"

#include <chrono>

#include "spanner/errors.hpp"

namespace spanner {

namespace {

double millis_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

DoubledGraph double_cover(const Graph& g) {
  std::size_t n = g.vertex_count();
  std::vector<VertexPair> edges;
  edges.reserve(g.edge_count() * 2);
  for (const auto& [u, v] : g.edges()) {
    edges.emplace_back(u, static_cast<VertexId>(v + n));
    edges.emplace_back(v, static_cast<VertexId>(u + n));
  }
  return {Graph::from_edges(n * 2, std::move(edges)), n};
}

EdgeSet project_spanner(const EdgeSet& h0, std::size_t n) {
  EdgeSet out;
  for (const auto& [a, b] : h0.edges()) {
    if (a >= n || b < n) {
      throw SubgraphViolation("doubled edge (" + std::to_string(a) + ", " +
                              std::to_string(b) +
                              ") does not cross the bipartition");
    }
    VertexId u = a;
    VertexId v = static_cast<VertexId>(b - n);
    if (u == v) {
      throw SubgraphViolation("doubled edge (" + std::to_string(a) + ", " +
                              std::to_string(b) +
                              ") projects to a self-loop");
    }
    out.add(u, v);
  }
  return out;
}

FourSpannerResult build_4_spanner(const Graph& g, const SpannerParams& params,
                                  unsigned threads) {
  FourSpannerResult result;
  result.input_vertex_count = g.vertex_count();
  result.input_edge_count = g.edge_count();

  auto t0 = std::chrono::steady_clock::now();
  DoubledGraph doubled = double_cover(g);
  result.double_millis = millis_since(t0);

  result.doubled = build_5_spanner(doubled.graph, params, threads);

  auto t1 = std::chrono::steady_clock::now();
  result.spanner_edges =
      project_spanner(result.doubled.spanner_edges, doubled.source_vertex_count);
  result.project_millis = millis_since(t1);
  return result;
}

}  // namespace spanner
