#include "spanner/residual.hpp"

#include <algorithm>

#include "spanner/errors.hpp"

namespace spanner {

ResidualGraph::ResidualGraph(const Graph& g)
    : base_(&g),
      alive_(g.vertex_count(), 1),
      live_degree_(g.vertex_count(), 0),
      live_edges_(g.edge_count()),
      live_vertices_(g.vertex_count()) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    live_degree_[v] = g.degree(static_cast<VertexId>(v));
  }
}

std::vector<VertexId> ResidualGraph::delete_closed_neighborhood(VertexId root) {
  if (root >= alive_.size() || !alive_[root]) {
    throw InvariantViolation("delete_closed_neighborhood: dead root " +
                             std::to_string(root));
  }
  std::vector<VertexId> victims;
  victims.push_back(root);
  for_each_live_neighbor(root, [&](VertexId w) { victims.push_back(w); });
  std::sort(victims.begin(), victims.end());

  // Mark with a distinct state so victim-victim edges are counted once.
  for (VertexId v : victims) alive_[v] = 2;
  for (VertexId v : victims) {
    for (VertexId w : base_->neighbors(v)) {
      if (alive_[w] == 1) {
        --live_degree_[w];
        --live_edges_;
      } else if (alive_[w] == 2 && w > v) {
        --live_edges_;
      }
    }
  }
  for (VertexId v : victims) {
    alive_[v] = 0;
    live_degree_[v] = 0;
  }
  live_vertices_ -= victims.size();
  return victims;
}

}  // namespace spanner
