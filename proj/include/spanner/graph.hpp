#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spanner/errors.hpp"

namespace spanner {

using VertexId = std::uint32_t;
using VertexPair = std::pair<VertexId, VertexId>;

inline constexpr VertexId kNoVertex = 0xffffffffu;
inline constexpr std::uint32_t kUnreachable = 0xffffffffu;

// Returns (min, max) orientation of an undirected edge.
inline VertexPair canonical_edge(VertexId a, VertexId b) {
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

// Immutable simple undirected graph in compressed adjacency form.
// Neighbor lists are strictly increasing; symmetry holds by construction.
class Graph {
 public:
  Graph() = default;

  // Normalizes: drops self-loops, merges duplicate/reversed edges.
  // Throws BoundsError if an endpoint is >= n.
  static Graph from_edges(std::size_t n, std::vector<VertexPair> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::uint64_t edge_count() const { return neighbors_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(VertexId u, VertexId v) const;

  // Canonical edge list: min endpoint first, sorted lexicographically.
  std::vector<VertexPair> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::uint64_t> offsets_;  // size n + 1
  std::vector<VertexId> neighbors_;     // size 2m, sorted per vertex
};

// Deduplicated canonical edge set (min endpoint first, lexicographic).
// Accumulates appends cheaply; canonical form is restored lazily.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<VertexPair> edges) : edges_(std::move(edges)) {
    canonical_ = false;
  }

  void add(VertexId a, VertexId b) {
    edges_.push_back(canonical_edge(a, b));
    canonical_ = false;
  }
  void merge(const EdgeSet& other) {
    edges_.insert(edges_.end(), other.edges_.begin(), other.edges_.end());
    canonical_ = false;
  }

  std::size_t size() const {
    canonicalize();
    return edges_.size();
  }
  bool empty() const { return size() == 0; }
  std::span<const VertexPair> edges() const {
    canonicalize();
    return edges_;
  }
  bool contains(VertexId a, VertexId b) const;

  bool operator==(const EdgeSet& other) const {
    canonicalize();
    other.canonicalize();
    return edges_ == other.edges_;
  }

 private:
  void canonicalize() const;

  mutable std::vector<VertexPair> edges_;
  mutable bool canonical_ = true;
};

// Parses "u v" lines; '#' comments and blank lines are ignored. An optional
// leading header "p <n> <m>" fixes the vertex count (the m field is
// informational). Without a header, n = 1 + max vertex id.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

// Header line "p <n> <m>" followed by canonical edges, LF-terminated.
std::string serialize(const Graph& g);
void serialize_edge_set(std::ostream& out, const EdgeSet& edges, std::size_t n);

// Uniform simple graph with exactly m edges, fully determined by seed.
// PRNG contract (part of the external format): std::mt19937_64 seeded with
// seed; bounded draws by rejection (threshold 2^64 mod k); Floyd subset
// sampling over lexicographic pair indices. Throws CapacityError when
// m > n(n-1)/2.
Graph generate_gnm(std::size_t n, std::uint64_t m, std::uint64_t seed);

}  // namespace spanner
