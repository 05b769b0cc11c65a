#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "mse/distance.hpp"
#include "mse/flow.hpp"
#include "mse/graph.hpp"
#include "mse/verify.hpp"

namespace mse {

enum class Method { exhaustive, enumeration, branching };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::exhaustive: return "exhaustive";
    case Method::enumeration: return "enum";
    case Method::branching: return "branching";
  }
  return "?";
}

struct SolveReport {
  bool answer = false;
  std::optional<Solution> witness;
  std::optional<std::vector<EdgeId>> shared_set;
  std::int64_t nodes = 0;
  Method method = Method::exhaustive;
  /// Minimum shared count over all solutions, when the method computes it.
  std::optional<std::int64_t> optimum;
};

namespace detail {

/// Saturating binomial coefficient.
inline double binom(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  double out = 1;
  for (std::int64_t i = 1; i <= r; ++i) out = out * static_cast<double>(n - r + i) / static_cast<double>(i);
  return out;
}

inline std::vector<EdgeId> path_edges(const PathSeq& p) {
  std::vector<EdgeId> out;
  for (const auto& st : p.steps) out.push_back(st.edge);
  return out;
}

inline Solution copies(const PathSeq& path, std::int64_t p) {
  return Solution{std::vector<PathSeq>(static_cast<std::size_t>(p), path)};
}

}  // namespace detail

/// Every simple s-t path, edge-id order DFS. Throws limit_error past `limit` paths.
inline std::vector<PathSeq> simple_paths(const Instance& inst, std::size_t limit) {
  const Graph& g = inst.graph;
  std::vector<PathSeq> out;
  std::vector<char> on(g.vertex_count(), 0);
  std::vector<Step> cur;
  auto dfs = [&](auto&& self, VertexId v) -> void {
    if (v == inst.t) {
      if (out.size() == limit) throw limit_error("too large for exhaustive: more than " + std::to_string(limit) + " simple s-t paths");
      out.push_back(PathSeq{cur});
      return;
    }
    on[v] = 1;
    for (const auto& inc : g.incident(v)) {
      if (!g.traversable(inc) || on[inc.other]) continue;
      cur.push_back({inc.edge, !inc.forward});
      self(self, inc.other);
      cur.pop_back();
    }
    on[v] = 0;
  };
  dfs(dfs, inst.s);
  return out;
}

/// Ground truth: all p-multisets of simple s-t paths, minimum shared count.
inline SolveReport solve_exhaustive_paths(const Instance& inst, std::size_t path_limit = 64,
                                          double multiset_limit = 1e7) {
  inst.validate();
  const Graph& g = inst.graph;
  SolveReport rep;
  rep.method = Method::exhaustive;
  const auto paths = simple_paths(inst, path_limit);
  if (paths.empty()) return rep;
  const auto P = static_cast<std::int64_t>(paths.size());
  if (detail::binom(P + inst.p - 1, inst.p) > multiset_limit)
    throw limit_error("too large for exhaustive: " + std::to_string(P) + " paths, p = " + std::to_string(inst.p));

  std::vector<std::vector<EdgeId>> edges;
  for (const auto& p : paths) {
    auto es = detail::path_edges(p);
    std::sort(es.begin(), es.end());
    edges.push_back(es);
  }
  std::vector<int> use(g.edge_count(), 0);
  std::vector<std::size_t> pick, best_pick;
  std::int64_t cost = 0, best = -1;
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    ++rep.nodes;
    if (best == 0) return;
    if (best >= 0 && cost >= best) return;
    if (static_cast<std::int64_t>(pick.size()) == inst.p) {
      best = cost;
      best_pick = pick;
      return;
    }
    for (std::size_t i = from; i < paths.size(); ++i) {
      const std::int64_t before = cost;
      for (EdgeId e : edges[i])
        if (++use[e] == 2) cost += g.length(e);
      pick.push_back(i);
      self(self, i);
      pick.pop_back();
      for (EdgeId e : edges[i]) --use[e];
      cost = before;
    }
  };
  dfs(dfs, 0);
  rep.optimum = best;
  if (best <= inst.k) {
    rep.answer = true;
    Solution sol;
    for (auto i : best_pick) sol.paths.push_back(paths[i]);
    rep.shared_set = shared_edges(sol);
    rep.witness = std::move(sol);
  }
  return rep;
}

/// Enumerates boost sets S (super-edges, chain length charged against k) in
/// edge-id order and accepts as soon as the boosted flow reaches p. A branch
/// is cut when even boosting every remaining affordable edge leaves flow < p.
inline SolveReport solve_enum_oracle(const Instance& inst, double guard = 1e8) {
  inst.validate();
  const Graph& g = inst.graph;
  const auto E = static_cast<std::int64_t>(g.edge_count());
  double worst = 0;
  for (std::int64_t i = 0; i <= std::min(inst.k, E); ++i) worst = std::max(worst, detail::binom(E, i));
  if (worst > guard) throw limit_error("enumeration guard exceeded: C(" + std::to_string(E) + ", k) > " + std::to_string(guard));

  SolveReport rep;
  rep.method = Method::enumeration;
  FlowEngine engine(inst);
  std::vector<char> mask(g.edge_count(), 0), probe(g.edge_count(), 0);
  std::vector<EdgeId> chosen;

  auto dfs = [&](auto&& self, EdgeId from, std::int64_t budget) -> bool {
    ++rep.nodes;
    if (engine.run(mask, inst.p) >= inst.p) return true;
    for (EdgeId j = from; j < g.edge_count(); ++j) {
      if (g.length(j) > budget) continue;
      probe = mask;
      for (EdgeId e = j; e < g.edge_count(); ++e)
        if (g.length(e) <= budget) probe[e] = 1;
      if (engine.run(probe, inst.p) < inst.p) break;  // later siblings see a subset of these edges
      mask[j] = 1;
      chosen.push_back(j);
      if (self(self, j + 1, budget - g.length(j))) return true;
      chosen.pop_back();
      mask[j] = 0;
    }
    return false;
  };
  if (dfs(dfs, 0, inst.k)) {
    engine.run(mask, inst.p);
    FlowResult fr{engine.value(), {}, engine.flow()};
    rep.answer = true;
    rep.witness = Solution{decompose_to_paths(inst, fr, inst.p)};
    rep.shared_set = chosen;
  }
  return rep;
}

/// Smallest k' ≤ k_max for which the enumeration oracle says yes.
inline std::optional<std::int64_t> enum_optimum(Instance inst, std::int64_t k_max) {
  for (std::int64_t k = 0; k <= k_max; ++k) {
    inst.k = k;
    if (solve_enum_oracle(inst).answer) return k;
  }
  return std::nullopt;
}

struct BranchingOptions {
  unsigned jobs = 1;
};

namespace detail {

struct Brancher {
  const Instance& inst;
  FlowEngine engine;
  std::vector<char> mask;
  std::vector<EdgeId> chosen;
  std::int64_t nodes = 0;

  explicit Brancher(const Instance& i) : inst(i), engine(i), mask(i.graph.edge_count(), 0) {}

  bool run(std::int64_t budget) {
    ++nodes;
    if (engine.run(mask, inst.p) >= inst.p) return true;
    if (budget == 0) return false;
    for (EdgeId e : engine.cut()) {
      if (inst.graph.length(e) > budget) continue;
      if (descend(e, budget)) return true;
    }
    return false;
  }

  bool descend(EdgeId e, std::int64_t budget) {
    mask[e] = 1;
    chosen.push_back(e);
    if (run(budget - inst.graph.length(e))) return true;
    chosen.pop_back();
    mask[e] = 0;
    return false;
  }

  Solution witness() {
    engine.run(mask, inst.p);
    FlowResult fr{engine.value(), {}, engine.flow()};
    return Solution{decompose_to_paths(inst, fr, inst.p)};
  }
};

}  // namespace detail

/// Branches on the edges of a cut smaller than p: one of them must be shared.
/// Search tree size is at most sum_{i<=k} (p-1)^i on unit-edge graphs.
inline SolveReport solve_fpt_branching(const Instance& inst, BranchingOptions opt = {}) {
  inst.validate();
  SolveReport rep;
  rep.method = Method::branching;
  const auto d = distance(inst.graph, inst.s, inst.t);
  if (!d) {
    rep.nodes = 1;
    return rep;
  }
  if (*d <= inst.k) {
    rep.nodes = 1;
    rep.answer = true;
    auto path = *shortest_path(inst.graph, inst.s, inst.t);
    rep.witness = detail::copies(path, inst.p);
    rep.shared_set = shared_edges(*rep.witness);
    return rep;
  }

  detail::Brancher root(inst);
  if (opt.jobs <= 1) {
    rep.answer = root.run(inst.k);
    rep.nodes = root.nodes;
    if (rep.answer) {
      rep.witness = root.witness();
      rep.shared_set = root.chosen;
    }
    return rep;
  }

  // Parallel top level: children are independent subtrees; the lowest-index
  // successful child is what the sequential search would return.
  ++rep.nodes;
  if (root.engine.run(root.mask, inst.p) >= inst.p) {
    rep.answer = true;
    rep.witness = root.witness();
    rep.shared_set = std::vector<EdgeId>{};
    return rep;
  }
  if (inst.k == 0) return rep;
  std::vector<EdgeId> children;
  for (EdgeId e : root.engine.cut())
    if (inst.graph.length(e) <= inst.k) children.push_back(e);
  for (std::size_t base = 0; base < children.size(); base += opt.jobs) {
    const std::size_t end = std::min(children.size(), base + opt.jobs);
    std::vector<std::future<std::optional<std::pair<std::vector<EdgeId>, Solution>>>> futs;
    std::vector<std::int64_t> child_nodes(end - base, 0);
    for (std::size_t i = base; i < end; ++i) {
      futs.push_back(std::async(std::launch::async, [&, i]() -> std::optional<std::pair<std::vector<EdgeId>, Solution>> {
        detail::Brancher b(inst);
        const bool ok = b.descend(children[i], inst.k);
        child_nodes[i - base] = b.nodes;
        if (!ok) return std::nullopt;
        return std::make_pair(b.chosen, b.witness());
      }));
    }
    std::optional<std::pair<std::vector<EdgeId>, Solution>> hit;
    for (std::size_t i = 0; i < futs.size(); ++i) {
      auto r = futs[i].get();
      rep.nodes += child_nodes[i];
      if (r && !hit) hit = std::move(r);
    }
    if (hit) {
      rep.answer = true;
      rep.shared_set = std::move(hit->first);
      rep.witness = std::move(hit->second);
      return rep;
    }
  }
  return rep;
}

inline Solution extract_witness(const SolveReport& rep, const Instance& inst) {
  if (!rep.answer || !rep.witness) throw precondition_error("no witness: the report answers no");
  const Verdict v = verify_solution(inst, *rep.witness);
  if (!v.accepted) throw error("internal: witness rejected (" + v.reason + ")");
  return *rep.witness;
}

}  // namespace mse
