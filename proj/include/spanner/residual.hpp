#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "spanner/graph.hpp"

namespace spanner {

// Mutable view of a graph under vertex deletions: alive mask, live degrees,
// and the live edge count D. Underlying adjacency is never touched; dead
// endpoints are skipped during traversal.
class ResidualGraph {
 public:
  explicit ResidualGraph(const Graph& g);

  const Graph& base() const { return *base_; }
  std::size_t vertex_count() const { return alive_.size(); }
  bool alive(VertexId v) const { return alive_[v] != 0; }
  std::uint32_t live_degree(VertexId v) const { return live_degree_[v]; }
  std::span<const std::uint32_t> live_degrees() const { return live_degree_; }
  std::uint64_t live_edge_count() const { return live_edges_; }
  std::uint64_t live_vertex_count() const { return live_vertices_; }

  template <typename Fn>
  void for_each_live_neighbor(VertexId v, Fn&& fn) const {
    for (VertexId w : base_->neighbors(v)) {
      if (alive_[w]) fn(w);
    }
  }

  // Deletes root and all its live neighbors; returns the victims in
  // increasing id order. root must be alive.
  std::vector<VertexId> delete_closed_neighborhood(VertexId root);

 private:
  const Graph* base_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::uint32_t> live_degree_;
  std::uint64_t live_edges_ = 0;
  std::uint64_t live_vertices_ = 0;
};

}  // namespace spanner
