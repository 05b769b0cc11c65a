#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mse/graph.hpp"

namespace mse {

struct EmbeddingVerdict {
  bool accepted = false;
  std::string reason;
  std::size_t max_degree = 0;  // of the expanded graph
};

namespace detail {

// A run of lattice points on one grid line. Degenerate (lo == hi) horizontal
// runs stand for single points.
struct Run {
  std::int64_t fixed;
  std::int64_t lo, hi;
  std::string owner;
};

inline std::string edge_owner(EdgeId e) { return "edge " + std::to_string(e); }

}  // namespace detail

/// Checks that the expanded graph is a subgraph of a bounded grid: vertex points
/// and chain interior points are pairwise distinct, every polyline step has
/// L1-length one and matches its declared chain length.
/// Runs on polyline corners, so chains of any length cost O(corners).
inline EmbeddingVerdict check_grid_embedding(const Graph& g) {
  EmbeddingVerdict out;
  if (!g.has_all_coords()) throw precondition_error("grid embedding check needs coordinates for every vertex");

  std::vector<detail::Run> horiz, vert;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Point p = *g.coord(v);
    horiz.push_back({p.y, p.x, p.x, "vertex " + std::to_string(v)});
    out.max_degree = std::max(out.max_degree, g.degree(v));
  }
  if (g.edge_count() > 0) out.max_degree = std::max<std::size_t>(out.max_degree, 2);

  std::map<std::pair<VertexId, VertexId>, EdgeId> unit_pairs;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const SuperEdge& se = g.edge(e);
    const Point a = *g.coord(se.tail), b = *g.coord(se.head);
    if (!se.has_polyline()) {
      if (se.length != 1) {
        out.reason = detail::edge_owner(e) + " is a chain without polyline";
        return out;
      }
      if (l1(a, b) != 1) {
        out.reason = detail::edge_owner(e) + " is not a unit lattice step";
        return out;
      }
      auto key = std::minmax(se.tail, se.head);
      if (auto [it, fresh] = unit_pairs.emplace(key, e); !fresh) {
        out.reason = "edges " + std::to_string(it->second) + " and " + std::to_string(e) + " overlap";
        return out;
      }
      continue;
    }
    const auto& c = se.corners;
    if (c.front() != a || c.back() != b) {
      out.reason = detail::edge_owner(e) + " polyline does not join its endpoints";
      return out;
    }
    const auto len = polyline_length(c);
    if (!len) {
      out.reason = detail::edge_owner(e) + " has a diagonal segment";
      return out;
    }
    if (*len != se.length) {
      out.reason = detail::edge_owner(e) + " polyline length " + std::to_string(*len) +
                   " differs from chain length " + std::to_string(se.length);
      return out;
    }
    if (se.length == 1) {
      auto key = std::minmax(se.tail, se.head);
      if (auto [it, fresh] = unit_pairs.emplace(key, e); !fresh) {
        out.reason = "edges " + std::to_string(it->second) + " and " + std::to_string(e) + " overlap";
        return out;
      }
    }
    // Interior points: every segment keeps its start corner (except the very
    // first) and drops its end corner.
    for (std::size_t q = 0; q + 1 < c.size(); ++q) {
      Point from = c[q];
      const Point to = c[q + 1];
      const std::int64_t dx = (to.x > from.x) - (to.x < from.x);
      const std::int64_t dy = (to.y > from.y) - (to.y < from.y);
      if (q == 0) from = {from.x + dx, from.y + dy};
      const Point last{to.x - dx, to.y - dy};
      if (l1(c[q], to) == 1 && q == 0) continue;  // nothing interior on this step
      if (dy == 0) {
        horiz.push_back({from.y, std::min(from.x, last.x), std::max(from.x, last.x), detail::edge_owner(e)});
      } else {
        vert.push_back({from.x, std::min(from.y, last.y), std::max(from.y, last.y), detail::edge_owner(e)});
      }
    }
  }

  auto same_line_overlap = [&](std::vector<detail::Run>& runs) -> std::string {
    std::sort(runs.begin(), runs.end(), [](const auto& l, const auto& r) {
      return std::tie(l.fixed, l.lo, l.hi) < std::tie(r.fixed, r.lo, r.hi);
    });
    for (std::size_t i = 1; i < runs.size(); ++i)
      if (runs[i].fixed == runs[i - 1].fixed && runs[i].lo <= runs[i - 1].hi)
        return runs[i - 1].owner + " and " + runs[i].owner + " occupy the same lattice point";
    return {};
  };
  if (auto why = same_line_overlap(horiz); !why.empty()) {
    out.reason = why;
    return out;
  }
  if (auto why = same_line_overlap(vert); !why.empty()) {
    out.reason = why;
    return out;
  }

  // Sweep over x: horizontal runs are active on [lo, hi]; each vertical run
  // queries the active y values inside its span.
  struct Event {
    std::int64_t x;
    int kind;  // 0 insert, 1 query, 2 remove
    std::size_t idx;
  };
  std::vector<Event> events;
  for (std::size_t i = 0; i < horiz.size(); ++i) {
    events.push_back({horiz[i].lo, 0, i});
    events.push_back({horiz[i].hi, 2, i});
  }
  for (std::size_t i = 0; i < vert.size(); ++i) events.push_back({vert[i].fixed, 1, i});
  std::sort(events.begin(), events.end(),
            [](const Event& a, const Event& b) { return std::tie(a.x, a.kind, a.idx) < std::tie(b.x, b.kind, b.idx); });
  std::multimap<std::int64_t, std::size_t> active;
  std::vector<std::multimap<std::int64_t, std::size_t>::iterator> where(horiz.size());
  for (const auto& ev : events) {
    if (ev.kind == 0) {
      where[ev.idx] = active.emplace(horiz[ev.idx].fixed, ev.idx);
    } else if (ev.kind == 2) {
      active.erase(where[ev.idx]);
    } else {
      const auto& v = vert[ev.idx];
      auto it = active.lower_bound(v.lo);
      if (it != active.end() && it->first <= v.hi) {
        out.reason = horiz[it->second].owner + " and " + v.owner + " occupy the same lattice point";
        return out;
      }
    }
  }
  out.accepted = true;
  return out;
}

}  // namespace mse
