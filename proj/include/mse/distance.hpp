#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <tuple>
#include <vector>

#include "mse/graph.hpp"

namespace mse {

/// Single-source chain-length-weighted distances; nullopt marks unreachable.
/// Directed graphs are searched along arc orientation.
inline std::vector<std::optional<std::int64_t>> distances_from(const Graph& g, VertexId src) {
  constexpr auto inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(g.vertex_count(), inf);
  using Item = std::pair<std::int64_t, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[src] = 0;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d != dist[v]) continue;
    for (const auto& inc : g.incident(v)) {
      if (!g.traversable(inc)) continue;
      const std::int64_t nd = d + g.length(inc.edge);
      if (nd < dist[inc.other]) {
        dist[inc.other] = nd;
        pq.push({nd, inc.other});
      }
    }
  }
  std::vector<std::optional<std::int64_t>> out(g.vertex_count());
  for (std::size_t v = 0; v < dist.size(); ++v)
    if (dist[v] != inf) out[v] = dist[v];
  return out;
}

inline std::optional<std::int64_t> distance(const Graph& g, VertexId u, VertexId v) {
  return distances_from(g, u)[v];
}

/// A shortest u-v path. Among equal-length paths the one whose edge-id sequence
/// is lexicographically smallest (read from u) wins.
inline std::optional<PathSeq> shortest_path(const Graph& g, VertexId u, VertexId v) {
  // Distances to v (reverse search) let us walk forward greedily by edge id.
  constexpr auto inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> to_v(g.vertex_count(), inf);
  using Item = std::pair<std::int64_t, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  to_v[v] = 0;
  pq.push({0, v});
  while (!pq.empty()) {
    auto [d, x] = pq.top();
    pq.pop();
    if (d != to_v[x]) continue;
    for (const auto& inc : g.incident(x)) {
      // Reverse search: the edge must be traversable from inc.other towards x.
      if (g.directed() && inc.forward) continue;
      const std::int64_t nd = d + g.length(inc.edge);
      if (nd < to_v[inc.other]) {
        to_v[inc.other] = nd;
        pq.push({nd, inc.other});
      }
    }
  }
  if (to_v[u] == inf) return std::nullopt;
  PathSeq path;
  VertexId at = u;
  while (at != v) {
    for (const auto& inc : g.incident(at)) {
      if (!g.traversable(inc)) continue;
      if (to_v[inc.other] != inf && to_v[inc.other] + g.length(inc.edge) == to_v[at]) {
        path.steps.push_back({inc.edge, !inc.forward});
        at = inc.other;
        break;
      }
    }
  }
  return path;
}

}  // namespace mse
