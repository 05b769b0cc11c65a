#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "mse/distance.hpp"
#include "mse/expand.hpp"
#include "mse/graph.hpp"
#include "mse/solver.hpp"
#include "mse/vc.hpp"

namespace mse {

struct ReductionConstants {
  std::int64_t M = 0, trees = 0, c = 10, cPrime = 0, b = 0, a0 = 0, a = 0, p = 0, kPrime = 0;
  std::int64_t bPrime = 0, kDoublePrime = 0, cManhattan = 20;
  friend bool operator==(const ReductionConstants&, const ReductionConstants&) = default;
};

namespace detail {

inline std::int64_t log2_exact(std::size_t n) { return std::countr_zero(n); }

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace detail

inline ReductionConstants reduction_constants(const VCInstance& vc) {
  const std::size_t nv = vc.graph.vertex_count();
  const auto V = static_cast<std::int64_t>(nv), E = static_cast<std::int64_t>(vc.graph.edge_count());
  if (nv < 2 || !is_power_of_two(nv)) throw precondition_error("vertex count must be a power of two >= 2");
  if (E < 1) throw precondition_error("the graph has no edges");
  if (vc.k < 0 || vc.k > V) throw precondition_error("k must lie in [0, |V|]");
  const std::int64_t lg = detail::log2_exact(nv), k = vc.k;
  ReductionConstants c;
  c.M = 2 * (E + 1) + 2;
  c.trees = 2 * (V * lg - 2 + 2 * k);
  c.c = 10;
  c.cPrime = 2 * V + E * V - 2 * E;
  c.b = 2 * c.M * c.cPrime + 1;
  // M + c - 2 is even, so this division is exact; keep the ceiling anyway.
  c.a0 = detail::ceil_div((V - 1) * (c.M + c.c - 2), 2) - lg;
  c.a = std::max({c.a0, E * E * E, c.b * c.b});
  c.p = k * c.M + (V - k) + 1;
  c.kPrime = k * (2 * c.a + c.b * E) + c.trees + c.cPrime * (2 * c.M - 2);
  c.bPrime = c.b + 1;
  c.kDoublePrime = c.kPrime + k * E;
  c.cManhattan = 20;
  return c;
}

// ---------------------------------------------------------------- malformed

enum class Malformation { TrivialYes, TrivialNo, SmallP, WellFormed };

inline const char* to_string(Malformation m) {
  switch (m) {
    case Malformation::TrivialYes: return "trivial-yes";
    case Malformation::TrivialNo: return "trivial-no";
    case Malformation::SmallP: return "small-p";
    default: return "well-formed";
  }
}

inline Malformation classify_malformed(const Instance& inst) {
  const auto d = distance(inst.graph, inst.s, inst.t);
  if (d && *d <= inst.k) return Malformation::TrivialYes;
  if (!d) return Malformation::TrivialNo;
  if (inst.p >= 2 * inst.graph.total_length() && inst.k < *d) return Malformation::TrivialNo;
  if (inst.p <= 2) return Malformation::SmallP;
  return Malformation::WellFormed;
}

/// Verdict for a malformed instance; nullopt when it is well formed.
inline std::optional<bool> decide_malformed(const Instance& inst) {
  switch (classify_malformed(inst)) {
    case Malformation::TrivialYes: return true;
    case Malformation::TrivialNo: return false;
    case Malformation::SmallP: return solve_fpt_branching(inst).answer;
    default: return std::nullopt;
  }
}

// ---------------------------------------------------------------- measurements

/// Largest finite distance in the underlying undirected expanded graph.
inline std::int64_t unit_diameter(const Graph& g, std::int64_t max_unit_edges = 200'000) {
  const Graph u = expand_chains(g, max_unit_edges).graph;
  const std::size_t n = u.vertex_count();
  std::int64_t best = 0;
  std::vector<std::int64_t> dist(n);
  std::deque<VertexId> queue;
  for (VertexId src = 0; src < n; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    queue.assign(1, src);
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      best = std::max(best, dist[v]);
      for (const auto& inc : u.incident(v))
        if (dist[inc.other] < 0) {
          dist[inc.other] = dist[v] + 1;
          queue.push_back(inc.other);
        }
    }
  }
  return best;
}

inline std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
  if (g.edge_count() > 0) {
    for (const auto& e : g.edges())
      if (e.length > 1) d = std::max<std::size_t>(d, 2);
  }
  return d;
}

// ---------------------------------------------------------------- tree gadget

/// Complete binary tree of height h rooted at s (vertex 0, breadth-first ids);
/// the 2^h leaves are merged into t, the last vertex. p and k are left at 1 and 0.
inline Instance build_tree_gadget(std::int64_t h) {
  if (h < 1 || h > 20) throw precondition_error("tree height must lie in [1, 20]");
  const std::size_t internal = (std::size_t{1} << h) - 1;
  Instance inst;
  inst.graph = Graph(Mode::undirected, internal + 1);
  const auto t = static_cast<VertexId>(internal);
  for (VertexId v = 0; v < internal; ++v)
    for (VertexId c : {2 * v + 1, 2 * v + 2}) inst.graph.add_edge(v, c < internal ? c : t);
  inst.s = 0;
  inst.t = t;
  return inst;
}

// ---------------------------------------------------------------- directed lift

/// Every edge becomes two opposite arcs with ids 2e and 2e+1.
inline Instance undirected_to_directed(const Instance& inst) {
  if (inst.graph.directed()) throw precondition_error("instance is already directed");
  Instance out = inst;
  out.graph = Graph(Mode::directed, inst.graph.vertex_count());
  for (VertexId v = 0; v < inst.graph.vertex_count(); ++v)
    if (const auto& c = inst.graph.coord(v)) out.graph.set_coord(v, *c);
  for (const auto& e : inst.graph.edges()) {
    out.graph.add_edge(e.tail, e.head, e.length, e.corners);
    std::vector<Point> rev(e.corners.rbegin(), e.corners.rend());
    out.graph.add_edge(e.head, e.tail, e.length, rev);
  }
  return out;
}

// ---------------------------------------------------------------- OR-composition

struct CompositionReport {
  Instance instance;
  std::int64_t pPrime = 0, kPrime = 0;
  std::size_t q = 0;             // after padding
  std::int64_t log_q = 0;
  std::size_t input_max_degree = 0, composed_max_degree = 0;
  std::int64_t input_max_diameter = 0, composed_diameter = 0;
  std::int64_t diameter_bound = 0;       // 4 log q + max input diameter
  std::int64_t treewidth_additive = 0;   // 2 log q on top of the inputs' treewidth
  std::vector<VertexId> s_leaves, t_leaves;
  std::vector<std::vector<VertexId>> vertex_map;  // input i vertex v -> composed id
};

/// Joins q instances of equal (p, k) below an s-tree and a t-tree whose edges are
/// (k+1)-chains. `directed` orients tree chains away from s and toward t.
inline CompositionReport or_compose(const std::vector<Instance>& instances, bool directed = false,
                                    bool measure = true) {
  if (instances.empty()) throw precondition_error("nothing to compose");
  const std::int64_t p = instances[0].p, k = instances[0].k;
  const Mode mode = directed ? Mode::directed : Mode::undirected;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& in = instances[i];
    in.validate();
    if (in.p != p || in.k != k) throw precondition_error("instances disagree on (p, k)");
    if (in.graph.mode() != mode)
      throw precondition_error("instance " + std::to_string(i) + " is " + to_string(in.graph.mode()) +
                               " but the composition is " + to_string(mode));
    if (const auto m = classify_malformed(in); m != Malformation::WellFormed)
      throw precondition_error("instance " + std::to_string(i) + " is malformed (" + to_string(m) + ")");
  }

  std::vector<const Instance*> list;
  for (const auto& in : instances) list.push_back(&in);
  for (std::size_t i = 0; !is_power_of_two(list.size()); ++i) list.push_back(&instances[i % instances.size()]);
  const std::size_t q = list.size();
  const std::int64_t L = detail::log2_exact(q);

  CompositionReport rep;
  rep.q = q;
  rep.log_q = L;
  Graph g(mode);
  const VertexId s = g.add_vertex();
  // Map every input vertex first so that leaves can be identified with s_i / t_i.
  rep.vertex_map.resize(q);
  for (std::size_t i = 0; i < q; ++i) {
    const Graph& gi = list[i]->graph;
    for (VertexId v = 0; v < gi.vertex_count(); ++v) rep.vertex_map[i].push_back(g.add_vertex());
    rep.s_leaves.push_back(rep.vertex_map[i][list[i]->s]);
    rep.t_leaves.push_back(rep.vertex_map[i][list[i]->t]);
  }
  const VertexId t = g.add_vertex();

  // Level-by-level: level d has 2^d nodes; the last level are the leaves.
  auto build_tree = [&](VertexId root, const std::vector<VertexId>& leaves, bool toward_root) {
    std::vector<VertexId> level{root};
    for (std::int64_t d = 1; d <= L; ++d) {
      std::vector<VertexId> next;
      for (std::size_t i = 0; i < level.size(); ++i)
        for (int c = 0; c < 2; ++c) {
          const VertexId child = d == L ? leaves[2 * i + c] : g.add_vertex();
          if (toward_root)
            g.add_edge(child, level[i], k + 1);
          else
            g.add_edge(level[i], child, k + 1);
          next.push_back(child);
        }
      level = std::move(next);
    }
  };
  if (L == 0) {
    // A single instance: s and t attach by (k+1)-chains would change the answer,
    // so identify through zero-length trees by composing the input directly.
    rep.instance = *list[0];
    rep.pPrime = p;
    rep.kPrime = k;
    rep.s_leaves = {list[0]->s};
    rep.t_leaves = {list[0]->t};
    rep.vertex_map[0].clear();
    for (VertexId v = 0; v < list[0]->graph.vertex_count(); ++v) rep.vertex_map[0].push_back(v);
  } else {
    build_tree(s, rep.s_leaves, false);
    build_tree(t, rep.t_leaves, true);
    for (std::size_t i = 0; i < q; ++i)
      for (const auto& e : list[i]->graph.edges())
        g.add_edge(rep.vertex_map[i][e.tail], rep.vertex_map[i][e.head], e.length);
    rep.pPrime = p + L;
    rep.kPrime = 2 * L * (k + 1) + k;
    rep.instance.graph = std::move(g);
    rep.instance.s = s;
    rep.instance.t = t;
    rep.instance.p = rep.pPrime;
    rep.instance.k = rep.kPrime;
  }

  rep.diameter_bound = 4 * L;
  rep.treewidth_additive = 2 * L;
  for (const auto* in : list) rep.input_max_degree = std::max(rep.input_max_degree, max_degree(in->graph));
  rep.composed_max_degree = max_degree(rep.instance.graph);
  if (measure) {
    for (const auto& in : instances) rep.input_max_diameter = std::max(rep.input_max_diameter, unit_diameter(in.graph));
    rep.composed_diameter = unit_diameter(rep.instance.graph);
  }
  rep.diameter_bound += rep.input_max_diameter;
  return rep;
}

}  // namespace mse
