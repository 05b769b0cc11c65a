#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mse/graph.hpp"

namespace mse {

/// Capacity ceiling on boosted super-edges, 1 elsewhere. A boosted chain is
/// boosted on all of its unit edges.
struct BoostedCaps {
  std::vector<EdgeId> boosted;
  std::int64_t ceiling = 1;
};

/// `arc_flow[e]` is the signed flow on super-edge e (positive = tail -> head).
/// All unit edges of a chain carry the same flow, so one value per chain is
/// the whole per-unit-edge assignment.
struct FlowResult {
  std::int64_t value = 0;
  std::vector<EdgeId> min_cut;  // only filled when value < ceiling
  std::vector<std::int64_t> arc_flow;
};

/// Augmenting-path max-flow on the compressed graph, reusable across many
/// boost sets of the same instance. BFS scans incidences in edge-id order, so
/// results are deterministic.
class FlowEngine {
 public:
  explicit FlowEngine(const Instance& inst)
      : g_(&inst.graph), s_(inst.s), t_(inst.t),
        flow_(inst.graph.edge_count()), cap_(inst.graph.edge_count()),
        parent_(inst.graph.vertex_count()), seen_(inst.graph.vertex_count()),
        queue_(inst.graph.vertex_count()) {}

  /// Max flow capped at `ceiling`; `boosted[e] != 0` raises edge e to `ceiling`.
  std::int64_t run(const std::vector<char>& boosted, std::int64_t ceiling) {
    std::fill(flow_.begin(), flow_.end(), 0);
    for (std::size_t e = 0; e < cap_.size(); ++e) cap_[e] = boosted[e] ? ceiling : 1;
    value_ = 0;
    while (value_ < ceiling && augment()) ++value_;
    if (value_ < ceiling) stamp_reachable();
    return value_;
  }

  std::int64_t value() const { return value_; }
  const std::vector<std::int64_t>& flow() const { return flow_; }

  /// Edges leaving the residual-reachable side of s. Valid after run() returned
  /// less than the ceiling.
  std::vector<EdgeId> cut() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g_->edge_count(); ++e) {
      const auto& se = g_->edge(e);
      const bool a = seen_[se.tail] == stamp_, b = seen_[se.head] == stamp_;
      if (g_->directed() ? (a && !b) : (a != b)) out.push_back(e);
    }
    return out;
  }

 private:
  std::int64_t residual(const Incidence& inc) const {
    const std::int64_t f = flow_[inc.edge], c = cap_[inc.edge];
    if (inc.forward) return c - f;
    return g_->directed() ? f : c + f;
  }

  bool bfs() {
    ++stamp_;
    std::size_t head = 0, tail = 0;
    queue_[tail++] = s_;
    seen_[s_] = stamp_;
    while (head < tail) {
      const VertexId v = queue_[head++];
      for (const auto& inc : g_->incident(v)) {
        if (seen_[inc.other] == stamp_ || residual(inc) <= 0) continue;
        seen_[inc.other] = stamp_;
        parent_[inc.other] = inc;
        if (inc.other == t_) return true;
        queue_[tail++] = inc.other;
      }
    }
    return false;
  }

  bool augment() {
    if (!bfs()) return false;
    for (VertexId v = t_; v != s_;) {
      const Incidence& inc = parent_[v];
      flow_[inc.edge] += inc.forward ? 1 : -1;
      const auto& se = g_->edge(inc.edge);
      v = inc.forward ? se.tail : se.head;
    }
    return true;
  }

  void stamp_reachable() { bfs(); }

  const Graph* g_;
  VertexId s_, t_;
  std::vector<std::int64_t> flow_, cap_;
  std::vector<Incidence> parent_;
  std::vector<std::uint64_t> seen_;
  std::vector<VertexId> queue_;
  std::uint64_t stamp_ = 0;
  std::int64_t value_ = 0;
};

inline std::vector<char> boost_mask(const Graph& g, const std::vector<EdgeId>& boosted) {
  std::vector<char> mask(g.edge_count(), 0);
  for (EdgeId e : boosted) mask.at(e) = 1;
  return mask;
}

inline FlowResult max_flow_boosted(const Instance& inst, const BoostedCaps& caps) {
  FlowEngine engine(inst);
  FlowResult fr;
  fr.value = engine.run(boost_mask(inst.graph, caps.boosted), caps.ceiling);
  if (fr.value < caps.ceiling) fr.min_cut = engine.cut();
  fr.arc_flow = engine.flow();
  return fr;
}

/// A cut of capacity below the ceiling; it never contains a boosted edge.
inline std::vector<EdgeId> min_cut_boosted(const Instance& inst, const BoostedCaps& caps) {
  FlowResult fr = max_flow_boosted(inst, caps);
  if (fr.value >= caps.ceiling) throw precondition_error("flow reaches the ceiling; no small cut exists");
  return fr.min_cut;
}

/// Peels `count` simple s-t paths off a flow. Cycles met on the way are
/// cancelled, so every edge carrying flow 1 ends up in at most one path.
inline std::vector<PathSeq> decompose_to_paths(const Instance& inst, const FlowResult& fr, std::int64_t count) {
  if (fr.value < count) throw precondition_error("flow value " + std::to_string(fr.value) + " below requested " + std::to_string(count));
  const Graph& g = inst.graph;
  std::vector<std::int64_t> f = fr.arc_flow;
  std::vector<std::size_t> pos(g.vertex_count(), SIZE_MAX);
  auto push = [&](const Step& st, std::int64_t d) { f[st.edge] += st.reverse ? d : -d; };  // d=+1 undoes one unit
  std::vector<PathSeq> out;
  for (std::int64_t n = 0; n < count; ++n) {
    std::vector<Step> walk;
    std::vector<VertexId> verts{inst.s};
    pos[inst.s] = 0;
    while (verts.back() != inst.t) {
      const VertexId v = verts.back();
      const Incidence* next = nullptr;
      for (const auto& inc : g.incident(v)) {
        const std::int64_t fe = f[inc.edge];
        if ((inc.forward && fe > 0) || (!inc.forward && fe < 0)) {
          next = &inc;
          break;
        }
      }
      if (!next) throw error("flow decomposition got stuck; flow not conserved");
      const Step st{next->edge, !next->forward};
      const VertexId w = next->other;
      if (pos[w] != SIZE_MAX) {
        // Cycle: cancel it and rewind the walk to w.
        push(st, 1);
        for (std::size_t i = pos[w]; i < walk.size(); ++i) push(walk[i], 1);
        for (std::size_t i = pos[w] + 1; i < verts.size(); ++i) pos[verts[i]] = SIZE_MAX;
        walk.resize(pos[w]);
        verts.resize(pos[w] + 1);
        continue;
      }
      walk.push_back(st);
      verts.push_back(w);
      pos[w] = verts.size() - 1;
    }
    for (const auto& st : walk) push(st, 1);
    for (VertexId v : verts) pos[v] = SIZE_MAX;
    out.push_back(PathSeq{std::move(walk)});
  }
  return out;
}

}  // namespace mse
