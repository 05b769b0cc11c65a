#pragma once

#include <cstdint>
#include <vector>

#include "mse/graph.hpp"

namespace mse {

/// A graph whose chains were replaced by unit edges, together with the mapping
/// between super-edges and the unit edges that realize them. Original vertices
/// keep their ids; interior chain vertices are appended after them.
struct ExpandedGraph {
  Graph graph;
  /// units[e] lists the unit edges of super-edge e in tail -> head order.
  std::vector<std::vector<EdgeId>> units;
  /// origin[u] = (super-edge, position along it) for unit edge u.
  std::vector<std::pair<EdgeId, std::int64_t>> origin;
};

inline ExpandedGraph expand_chains(const Graph& g, std::int64_t max_unit_edges = 50'000'000) {
  if (g.total_length() > max_unit_edges)
    throw limit_error("expansion would create " + std::to_string(g.total_length()) +
                      " unit edges (limit " + std::to_string(max_unit_edges) + ")");
  ExpandedGraph ex;
  ex.graph = Graph(g.mode(), g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.coord(v)) ex.graph.set_coord(v, *g.coord(v));
  ex.units.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const SuperEdge& se = g.edge(e);
    std::vector<Point> pts;
    if (se.has_polyline()) pts = expand_corners(se.corners);
    VertexId prev = se.tail;
    for (std::int64_t i = 0; i < se.length; ++i) {
      VertexId next;
      if (i + 1 == se.length) {
        next = se.head;
      } else {
        std::optional<Point> c;
        if (static_cast<std::int64_t>(pts.size()) == se.length + 1) c = pts[static_cast<std::size_t>(i + 1)];
        next = ex.graph.add_vertex(c);
      }
      const EdgeId u = ex.graph.add_edge(prev, next);
      ex.units[e].push_back(u);
      ex.origin.push_back({e, i});
      prev = next;
    }
  }
  return ex;
}

/// Compressed solution -> expanded solution.
inline Solution to_expanded(const ExpandedGraph& ex, const Solution& sol) {
  Solution out;
  for (const auto& path : sol.paths) {
    PathSeq p;
    for (const auto& st : path.steps) {
      const auto& us = ex.units.at(st.edge);
      if (!st.reverse) {
        for (EdgeId u : us) p.steps.push_back({u, false});
      } else {
        for (auto it = us.rbegin(); it != us.rend(); ++it) p.steps.push_back({*it, true});
      }
    }
    out.paths.push_back(std::move(p));
  }
  return out;
}

/// Expanded solution -> compressed solution. Every chain must be traversed
/// completely and in one direction, which holds for any walk that starts and
/// ends at original vertices.
inline Solution to_compressed(const ExpandedGraph& ex, const Solution& sol) {
  Solution out;
  for (const auto& path : sol.paths) {
    PathSeq p;
    std::size_t i = 0;
    while (i < path.steps.size()) {
      const auto [e, pos] = ex.origin.at(path.steps[i].edge);
      const bool rev = path.steps[i].reverse;
      const auto n = ex.units[e].size();
      for (std::size_t j = 0; j < n; ++j) {
        if (i + j >= path.steps.size()) throw precondition_error("partial chain traversal");
        const auto [e2, pos2] = ex.origin.at(path.steps[i + j].edge);
        const auto want = rev ? static_cast<std::int64_t>(n - 1 - j) : static_cast<std::int64_t>(j);
        if (e2 != e || pos2 != want || path.steps[i + j].reverse != rev)
          throw precondition_error("partial chain traversal");
      }
      (void)pos;
      p.steps.push_back({e, rev});
      i += n;
    }
    out.paths.push_back(std::move(p));
  }
  return out;
}

}  // namespace mse
