#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "mse/graph.hpp"
#include "mse/verify.hpp"

namespace mse {

namespace detail {

/// Drops every closed sub-walk so the walk becomes a simple path.
inline std::vector<Step> shortcut_cycles(const Graph& g, VertexId start, const std::vector<Step>& walk) {
  std::vector<Step> out;
  std::vector<VertexId> verts{start};
  std::map<VertexId, std::size_t> at{{start, 0}};
  for (const auto& st : walk) {
    const VertexId w = step_to(g, st);
    if (auto it = at.find(w); it != at.end()) {
      const std::size_t keep = it->second;
      for (std::size_t i = keep + 1; i < verts.size(); ++i) at.erase(verts[i]);
      verts.resize(keep + 1);
      out.resize(keep);
      continue;
    }
    out.push_back(st);
    verts.push_back(w);
    at[w] = verts.size() - 1;
  }
  return out;
}

struct Crossing {
  std::size_t a, ia, b, ib;  // path a uses (u,v) at step ia, path b uses (v,u) at step ib
};

inline std::optional<Crossing> find_crossing(const Graph& g, const Solution& sol) {
  std::map<std::pair<VertexId, VertexId>, std::vector<std::pair<std::size_t, std::size_t>>> uses;
  for (std::size_t i = 0; i < sol.paths.size(); ++i)
    for (std::size_t j = 0; j < sol.paths[i].steps.size(); ++j) {
      const auto& st = sol.paths[i].steps[j];
      uses[{step_from(g, st), step_to(g, st)}].push_back({i, j});
    }
  for (std::size_t i = 0; i < sol.paths.size(); ++i)
    for (std::size_t j = 0; j < sol.paths[i].steps.size(); ++j) {
      const auto& st = sol.paths[i].steps[j];
      auto it = uses.find({step_to(g, st), step_from(g, st)});
      if (it == uses.end()) continue;
      for (auto [b, ib] : it->second)
        if (b != i) return Crossing{i, j, b, ib};
    }
  return std::nullopt;
}

}  // namespace detail

/// Removes opposite-direction use of anti-parallel arc pairs by exchanging path
/// tails at the crossing and shortcutting the cycles this creates. Every rewire
/// drops at least two edge occurrences, so the loop terminates, and per-edge
/// use counts never grow, so the shared count never grows either.
inline Solution normalize_antiparallel(const Instance& inst, Solution sol) {
  const Graph& g = inst.graph;
  if (!g.directed()) throw precondition_error("anti-parallel normalization needs a directed instance");
  if (auto v = verify_solution(inst, sol); !v.accepted) throw precondition_error("invalid input solution: " + v.reason);
  while (auto c = detail::find_crossing(g, sol)) {
    const auto& A = sol.paths[c->a].steps;
    const auto& B = sol.paths[c->b].steps;
    // A = A[s,u] (u,v) A[v,t];  B = B[s,v] (v,u) B[u,t]
    std::vector<Step> na(A.begin(), A.begin() + static_cast<std::ptrdiff_t>(c->ia));
    na.insert(na.end(), B.begin() + static_cast<std::ptrdiff_t>(c->ib + 1), B.end());
    std::vector<Step> nb(B.begin(), B.begin() + static_cast<std::ptrdiff_t>(c->ib));
    nb.insert(nb.end(), A.begin() + static_cast<std::ptrdiff_t>(c->ia + 1), A.end());
    sol.paths[c->a].steps = detail::shortcut_cycles(g, inst.s, na);
    sol.paths[c->b].steps = detail::shortcut_cycles(g, inst.s, nb);
  }
  return sol;
}

/// True iff some anti-parallel pair is used in both directions.
inline bool has_antiparallel_crossing(const Instance& inst, const Solution& sol) {
  return detail::find_crossing(inst.graph, sol).has_value();
}

}  // namespace mse
