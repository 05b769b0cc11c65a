#pragma once

// Small builders shared by the unit tests. They deliberately avoid the
// library's own constructors (materialize_grid etc.) so tests stay independent.

#include <cstdint>
#include <random>
#include <vector>

#include "mse/graph.hpp"

namespace testkit {

using namespace mse;

/// n x m lattice, vertex (x, y) has id y * n + x; edge order: horizontals row by row, then verticals.
inline Graph grid_graph(int n, int m, Mode mode = Mode::undirected) {
  Graph g(mode, static_cast<std::size_t>(n * m));
  for (int y = 0; y < m; ++y)
    for (int x = 0; x < n; ++x) g.set_coord(static_cast<VertexId>(y * n + x), {x, y});
  for (int y = 0; y < m; ++y)
    for (int x = 0; x + 1 < n; ++x) g.add_edge(y * n + x, y * n + x + 1);
  for (int y = 0; y + 1 < m; ++y)
    for (int x = 0; x < n; ++x) g.add_edge(y * n + x, (y + 1) * n + x);
  return g;
}

inline VertexId gid(int n, int x, int y) { return static_cast<VertexId>(y * n + x); }

/// v0 - v1 - v2 - v3 - v0, edges 0..3 in that order.
inline Instance cycle4(std::int64_t p, std::int64_t k, Mode mode = Mode::undirected) {
  Instance inst;
  inst.graph = Graph(mode, 4);
  inst.graph.add_edge(0, 1);
  inst.graph.add_edge(1, 2);
  inst.graph.add_edge(2, 3);
  inst.graph.add_edge(3, 0);
  inst.s = 0;
  inst.t = 2;
  inst.p = p;
  inst.k = k;
  return inst;
}

inline Instance make_instance(Graph g, VertexId s, VertexId t, std::int64_t p, std::int64_t k) {
  Instance inst;
  inst.graph = std::move(g);
  inst.s = s;
  inst.t = t;
  inst.p = p;
  inst.k = k;
  return inst;
}

/// Random connected multigraph-free graph on n vertices with m edges (m >= n-1).
inline Graph random_connected(std::mt19937_64& rng, int n, int m, Mode mode, int max_len = 1) {
  Graph g(mode, static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> used;
  auto has = [&](int a, int b) {
    for (auto [x, y] : used)
      if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
  };
  std::uniform_int_distribution<int> len(1, max_len);
  for (int v = 1; v < n; ++v) {
    int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    if (rng() & 1) g.add_edge(u, v, len(rng)); else g.add_edge(v, u, len(rng));
    used.push_back({u, v});
  }
  int guard = 0;
  while (static_cast<int>(g.edge_count()) < m && guard++ < 10000) {
    int a = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int b = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (a == b || has(a, b)) continue;
    g.add_edge(a, b, len(rng));
    used.push_back({a, b});
  }
  return g;
}

}  // namespace testkit

namespace testkit {

/// Independent simple-path enumerator; each path is a list of (edge, reverse).
inline std::vector<std::vector<std::pair<EdgeId, bool>>> all_simple_paths(const Graph& g, VertexId s, VertexId t) {
  std::vector<std::vector<std::pair<EdgeId, bool>>> out;
  std::vector<std::pair<EdgeId, bool>> cur;
  std::vector<bool> on(g.vertex_count(), false);
  auto rec = [&](auto&& self, VertexId v) -> void {
    if (v == t) {
      out.push_back(cur);
      return;
    }
    on[v] = true;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& se = g.edge(e);
      if (se.tail == v && !on[se.head]) {
        cur.push_back({e, false});
        self(self, se.head);
        cur.pop_back();
      }
      if (!g.directed() && se.head == v && !on[se.tail]) {
        cur.push_back({e, true});
        self(self, se.tail);
        cur.pop_back();
      }
    }
    on[v] = false;
  };
  rec(rec, s);
  return out;
}

/// Largest number (capped at `cap`) of simple s-t paths, repetition allowed,
/// in which every edge outside `boosted` is used at most once in total.
inline int brute_force_packing(const Graph& g, VertexId s, VertexId t, const std::vector<EdgeId>& boosted, int cap) {
  auto paths = all_simple_paths(g, s, t);
  std::vector<bool> is_boosted(g.edge_count(), false);
  for (EdgeId e : boosted) is_boosted[e] = true;
  std::vector<int> use(g.edge_count(), 0);
  int best = 0;
  auto rec = [&](auto&& self, std::size_t from, int count) -> void {
    best = std::max(best, count);
    if (best >= cap) return;
    for (std::size_t i = from; i < paths.size(); ++i) {
      bool ok = true;
      for (auto [e, r] : paths[i])
        if (!is_boosted[e] && use[e] > 0) ok = false;
      if (!ok) continue;
      for (auto [e, r] : paths[i]) ++use[e];
      self(self, i, count + 1);
      for (auto [e, r] : paths[i]) --use[e];
    }
  };
  rec(rec, 0, 0);
  return std::min(best, cap);
}

/// Does removing `cut` disconnect t from s (respecting orientation)?
inline bool separates(const Graph& g, VertexId s, VertexId t, const std::vector<EdgeId>& cut) {
  std::vector<bool> gone(g.edge_count(), false);
  for (EdgeId e : cut) gone[e] = true;
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (gone[e]) continue;
      const auto& se = g.edge(e);
      VertexId w = v;
      if (se.tail == v) w = se.head;
      else if (!g.directed() && se.head == v) w = se.tail;
      if (w == v || seen[w]) continue;
      seen[w] = true;
      stack.push_back(w);
    }
  }
  return !seen[t];
}

}  // namespace testkit
