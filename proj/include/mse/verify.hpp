#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mse/graph.hpp"

namespace mse {

/// Outcome of checking a solution. `shared` is reported even when rejected,
/// as long as the paths could be read at all.
struct Verdict {
  bool accepted = false;
  std::int64_t shared = 0;
  std::string reason;
};

/// Edges used by at least two paths (duplicate paths count), ascending by id.
inline std::vector<EdgeId> shared_edges(const Solution& sol) {
  std::map<EdgeId, int> uses;
  for (const auto& path : sol.paths) {
    std::vector<EdgeId> ids;
    for (const auto& st : path.steps) ids.push_back(st.edge);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (EdgeId e : ids) ++uses[e];
  }
  std::vector<EdgeId> out;
  for (auto [e, n] : uses)
    if (n >= 2) out.push_back(e);
  return out;
}

/// Sum of chain lengths over shared super-edges.
inline std::int64_t shared_count(const Graph& g, const Solution& sol) {
  std::int64_t total = 0;
  for (EdgeId e : shared_edges(sol)) total += g.length(e);
  return total;
}

/// Vertex sequence of a path starting at `start`. Throws if the steps do not chain.
inline std::vector<VertexId> path_vertices(const Graph& g, VertexId start, const PathSeq& path) {
  std::vector<VertexId> vs{start};
  for (const auto& st : path.steps) {
    if (st.edge >= g.edge_count()) throw precondition_error("unknown edge id " + std::to_string(st.edge));
    if (step_from(g, st) != vs.back()) throw precondition_error("disconnected step sequence");
    vs.push_back(step_to(g, st));
  }
  return vs;
}

/// Reason why `path` is not a simple s-t path of `inst`, or empty when it is.
inline std::string check_path(const Instance& inst, const PathSeq& path) {
  const Graph& g = inst.graph;
  std::vector<char> seen(g.vertex_count(), 0);
  VertexId at = inst.s;
  seen[at] = 1;
  for (const auto& st : path.steps) {
    if (st.edge >= g.edge_count()) return "unknown edge id " + std::to_string(st.edge);
    if (g.directed() && st.reverse) return "direction violation on edge " + std::to_string(st.edge);
    if (step_from(g, st) != at) return "disconnected step sequence at edge " + std::to_string(st.edge);
    at = step_to(g, st);
    if (seen[at]) return "non-simple path revisits vertex " + std::to_string(at);
    seen[at] = 1;
  }
  if (at != inst.t) return "path does not end at t";
  return {};
}

/// Accepts iff there are exactly p simple s-t paths sharing at most k unit edges.
inline Verdict verify_solution(const Instance& inst, const Solution& sol) {
  Verdict v;
  for (const auto& path : sol.paths)
    for (const auto& st : path.steps)
      if (st.edge >= inst.graph.edge_count()) {
        v.reason = "unknown edge id " + std::to_string(st.edge);
        return v;
      }
  v.shared = shared_count(inst.graph, sol);
  if (static_cast<std::int64_t>(sol.paths.size()) != inst.p) {
    v.reason = "wrong path count: expected " + std::to_string(inst.p) + ", got " +
               std::to_string(sol.paths.size());
    return v;
  }
  for (std::size_t i = 0; i < sol.paths.size(); ++i) {
    if (auto why = check_path(inst, sol.paths[i]); !why.empty()) {
      v.reason = "path " + std::to_string(i) + ": " + why;
      return v;
    }
  }
  if (v.shared > inst.k) {
    v.reason = "shared " + std::to_string(v.shared) + " exceeds budget " + std::to_string(inst.k);
    return v;
  }
  v.accepted = true;
  return v;
}

}  // namespace mse
