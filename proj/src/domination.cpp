#include "spanner/domination.hpp"

#include <algorithm>
#include <queue>

#include "spanner/errors.hpp"

namespace spanner {

std::vector<std::uint32_t> greedy_cover(const CoverInstance& inst) {
  std::vector<std::uint8_t> covered(inst.target_count, 0);
  std::size_t covered_count = 0;

  // (count, candidate); greater count wins, then smaller id.
  struct Entry {
    std::size_t count;
    std::uint32_t candidate;
    bool operator<(const Entry& o) const {
      if (count != o.count) return count < o.count;
      return candidate > o.candidate;
    }
  };
  std::priority_queue<Entry> heap;
  for (std::uint32_t c = 0; c < inst.candidate_count; ++c) {
    if (!inst.coverage[c].empty()) {
      heap.push({inst.coverage[c].size(), c});
    }
  }

  auto fresh_count = [&](std::uint32_t c) {
    std::size_t k = 0;
    for (std::uint32_t t : inst.coverage[c]) k += !covered[t];
    return k;
  };

  std::vector<std::uint32_t> selected;
  std::vector<std::uint8_t> taken(inst.candidate_count, 0);
  while (covered_count < inst.target_count) {
    bool progressed = false;
    while (!heap.empty()) {
      Entry top = heap.top();
      heap.pop();
      if (taken[top.candidate]) continue;
      std::size_t now = fresh_count(top.candidate);
      if (now == 0) continue;
      if (now < top.count) {
        heap.push({now, top.candidate});
        continue;
      }
      taken[top.candidate] = 1;
      selected.push_back(top.candidate);
      for (std::uint32_t t : inst.coverage[top.candidate]) {
        if (!covered[t]) {
          covered[t] = 1;
          ++covered_count;
        }
      }
      progressed = true;
      break;
    }
    if (!progressed) {
      for (std::uint32_t t = 0; t < inst.target_count; ++t) {
        if (!covered[t]) throw InfeasibleCover(t);
      }
    }
  }

  // Independent post-run check: replay the selection onto a fresh bitmap.
  std::vector<std::uint8_t> check(inst.target_count, 0);
  for (std::uint32_t c : selected) {
    for (std::uint32_t t : inst.coverage[c]) check[t] = 1;
  }
  for (std::uint32_t t = 0; t < inst.target_count; ++t) {
    if (!check[t]) {
      throw InvariantViolation("greedy_cover left target " +
                               std::to_string(t) + " uncovered");
    }
  }
  return selected;
}

HeavyDominationInstance heavy_domination_instance(const ResidualGraph& g,
                                                  double heavy_threshold) {
  HeavyDominationInstance out;
  std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> target_index(n, kNoVertex);
  for (VertexId v = 0; v < n; ++v) {
    if (!g.alive(v)) continue;
    out.candidate_vertices.push_back(v);
    if (static_cast<double>(g.live_degree(v)) >= heavy_threshold) {
      target_index[v] = static_cast<std::uint32_t>(out.target_vertices.size());
      out.target_vertices.push_back(v);
    }
  }
  out.instance.candidate_count = out.candidate_vertices.size();
  out.instance.target_count = out.target_vertices.size();
  out.instance.coverage.resize(out.instance.candidate_count);
  for (std::size_t c = 0; c < out.candidate_vertices.size(); ++c) {
    VertexId x = out.candidate_vertices[c];
    auto& list = out.instance.coverage[c];
    if (target_index[x] != kNoVertex) list.push_back(target_index[x]);
    g.for_each_live_neighbor(x, [&](VertexId w) {
      if (target_index[w] != kNoVertex) list.push_back(target_index[w]);
    });
    std::sort(list.begin(), list.end());
  }
  return out;
}

EdgeSet attach_heavy_edges(const std::vector<VertexId>& s1,
                           const ResidualGraph& g, double heavy_threshold) {
  std::vector<std::uint8_t> in_s1(g.vertex_count(), 0);
  for (VertexId v : s1) in_s1[v] = 1;
  EdgeSet out;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (!g.alive(u) ||
        static_cast<double>(g.live_degree(u)) < heavy_threshold) {
      continue;
    }
    if (in_s1[u]) continue;
    VertexId dominator = kNoVertex;
    g.for_each_live_neighbor(u, [&](VertexId w) {
      if (dominator == kNoVertex && in_s1[w]) dominator = w;
    });
    if (dominator == kNoVertex) {
      throw InvariantViolation("heavy vertex " + std::to_string(u) +
                               " has no dominator in S1");
    }
    out.add(u, dominator);
  }
  return out;
}

}  // namespace spanner
