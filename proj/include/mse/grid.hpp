#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mse/flow.hpp"
#include "mse/graph.hpp"
#include "mse/solver.hpp"
#include "mse/verify.hpp"

namespace mse {

/// Bounded n x m grid instance given by coordinates only.
struct GridInstance {
  std::int64_t n = 1, m = 1;
  Point s, t;
  std::int64_t p = 1, k = 0;

  void validate() const {
    if (n < 1 || m < 1) throw precondition_error("grid dimensions must be positive");
    auto inside = [&](Point q) { return q.x >= 0 && q.x < n && q.y >= 0 && q.y < m; };
    if (!inside(s) || !inside(t)) throw precondition_error("s or t lies outside the grid");
    if (s == t) throw precondition_error("s and t must differ");
    if (p < 1) throw precondition_error("p must be positive");
    if (k < 0) throw precondition_error("k must be non-negative");
  }
  std::int64_t dist() const { return l1(s, t); }
  friend bool operator==(const GridInstance&, const GridInstance&) = default;
};

struct RimProfile {
  std::int64_t rho_x, rho_y, dual_x, dual_y;
  int deg;
  std::int64_t rho() const { return rho_x + rho_y; }
  std::int64_t dual() const { return dual_x + dual_y; }
};

inline RimProfile rim_profile(const GridInstance& gi, Point v) {
  RimProfile r{v.x, v.y, gi.n - 1 - v.x, gi.m - 1 - v.y, 4};
  r.deg -= (v.x == 0) + (v.x == gi.n - 1) + (v.y == 0) + (v.y == gi.m - 1);
  return r;
}

enum class GridClass { pSmall, pLarge, pNarrow };

inline const char* to_string(GridClass c) {
  switch (c) {
    case GridClass::pSmall: return "p-small";
    case GridClass::pLarge: return "p-large";
    case GridClass::pNarrow: return "p-narrow";
  }
  return "?";
}

inline GridClass classify(const GridInstance& gi) {
  if (gi.p > std::max(gi.n, gi.m)) return GridClass::pSmall;
  if (gi.p <= std::min(gi.n, gi.m)) return GridClass::pLarge;
  return GridClass::pNarrow;
}

/// Applied in this order: flip x, flip y, transpose; `swap` exchanges s and t.
struct Symmetry {
  bool flip_x = false, flip_y = false, transpose = false, swap = false;
  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

inline Point apply(const Symmetry& sym, std::int64_t n, std::int64_t m, Point q) {
  if (sym.flip_x) q.x = n - 1 - q.x;
  if (sym.flip_y) q.y = m - 1 - q.y;
  if (sym.transpose) std::swap(q.x, q.y);
  return q;
}

/// Inverse of `apply`; (n, m) are the dimensions before the symmetry.
inline Point unapply(const Symmetry& sym, std::int64_t n, std::int64_t m, Point q) {
  if (sym.transpose) std::swap(q.x, q.y);
  if (sym.flip_y) q.y = m - 1 - q.y;
  if (sym.flip_x) q.x = n - 1 - q.x;
  return q;
}

inline GridInstance apply(const Symmetry& sym, const GridInstance& gi) {
  GridInstance out = gi;
  out.s = apply(sym, gi.n, gi.m, gi.s);
  out.t = apply(sym, gi.n, gi.m, gi.t);
  if (sym.transpose) std::swap(out.n, out.m);
  if (sym.swap) std::swap(out.s, out.t);
  return out;
}

inline std::array<Symmetry, 16> all_symmetries() {
  std::array<Symmetry, 16> out;
  for (int i = 0; i < 16; ++i) out[i] = Symmetry{bool(i & 1), bool(i & 2), bool(i & 4), bool(i & 8)};
  return out;
}

inline std::int64_t side_capacity(const GridInstance& gi, Point v, bool dual) {
  const RimProfile r = rim_profile(gi, v);
  return 2 * ((dual ? r.dual() : r.rho()) + 2) - r.deg;
}

inline bool is_canonical(const GridInstance& gi) {
  const RimProfile rs = rim_profile(gi, gi.s);
  return gi.s.x <= gi.t.x && gi.s.y <= gi.t.y && rs.rho_x <= rs.rho_y &&
         side_capacity(gi, gi.s, false) <= side_capacity(gi, gi.t, true);
}

/// Every variant satisfying the canonical constraints, identity first.
inline std::vector<std::pair<GridInstance, Symmetry>> canonical_variants(const GridInstance& gi) {
  gi.validate();
  std::vector<std::pair<GridInstance, Symmetry>> out;
  for (const Symmetry& sym : all_symmetries()) {
    GridInstance c = apply(sym, gi);
    if (is_canonical(c)) out.push_back({c, sym});
  }
  if (out.empty()) throw error("no canonical symmetry variant exists for this grid instance");
  return out;
}

/// First of the 16 variants (identity first) with s lower-left of t,
/// rho_x(s) <= rho_y(s) and the s-side capacity not above the t-side one.
inline std::pair<GridInstance, Symmetry> canonicalize(const GridInstance& gi) {
  return canonical_variants(gi).front();
}

/// Vertex (x, y) has id y*n + x.
inline VertexId grid_vertex(const GridInstance& gi, Point q) { return static_cast<VertexId>(q.y * gi.n + q.x); }

/// Edge ids: horizontal edges sorted by (x, y) first, then vertical edges sorted
/// by (y, x). Every column cut and every row cut is a contiguous id range.
inline EdgeId grid_edge(const GridInstance& gi, Point a, Point b) {
  if (b < a) std::swap(a, b);
  if (a.y == b.y && b.x == a.x + 1) return static_cast<EdgeId>(a.x * gi.m + a.y);
  if (a.x == b.x && b.y == a.y + 1) return static_cast<EdgeId>((gi.n - 1) * gi.m + a.y * gi.n + a.x);
  throw precondition_error("points are not grid neighbours");
}

inline Instance materialize_grid(const GridInstance& gi) {
  gi.validate();
  Instance inst;
  inst.graph = Graph(Mode::undirected, static_cast<std::size_t>(gi.n * gi.m));
  for (std::int64_t y = 0; y < gi.m; ++y)
    for (std::int64_t x = 0; x < gi.n; ++x) inst.graph.set_coord(grid_vertex(gi, {x, y}), {x, y});
  for (std::int64_t x = 0; x + 1 < gi.n; ++x)
    for (std::int64_t y = 0; y < gi.m; ++y) inst.graph.add_edge(grid_vertex(gi, {x, y}), grid_vertex(gi, {x + 1, y}));
  for (std::int64_t y = 0; y + 1 < gi.m; ++y)
    for (std::int64_t x = 0; x < gi.n; ++x) inst.graph.add_edge(grid_vertex(gi, {x, y}), grid_vertex(gi, {x, y + 1}));
  inst.s = grid_vertex(gi, gi.s);
  inst.t = grid_vertex(gi, gi.t);
  inst.p = gi.p;
  inst.k = gi.k;
  return inst;
}

/// Path along an explicit point sequence of consecutive grid neighbours.
inline PathSeq grid_path(const GridInstance& gi, const std::vector<Point>& pts) {
  PathSeq path;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const EdgeId e = grid_edge(gi, pts[i - 1], pts[i]);
    path.steps.push_back({e, grid_vertex(gi, pts[i]) < grid_vertex(gi, pts[i - 1])});
  }
  return path;
}

/// x first, then y.
inline std::vector<Point> monotone_route(Point a, Point b) {
  std::vector<Point> pts{a};
  while (pts.back().x != b.x) pts.push_back({pts.back().x + (b.x > a.x ? 1 : -1), pts.back().y});
  while (pts.back().y != b.y) pts.push_back({pts.back().x, pts.back().y + (b.y > a.y ? 1 : -1)});
  return pts;
}

struct GridVerdict {
  bool answer = false;
  GridClass cls = GridClass::pLarge;
  bool trivial = false;   // decided (or witnessed) by p copies of a shortest path
  bool fallback = false;  // decided by the generic solver
  std::optional<Solution> witness;
};

/// p-small grids only admit the trivial solution: every row and column cut
/// between s and t has fewer than p edges.
inline GridVerdict decide_small(const GridInstance& gi) {
  gi.validate();
  if (classify(gi) != GridClass::pSmall) throw precondition_error("decide_small needs a p-small grid");
  GridVerdict v;
  v.cls = GridClass::pSmall;
  v.answer = v.trivial = gi.dist() <= gi.k;
  if (v.answer) {
    const PathSeq path = grid_path(gi, monotone_route(gi.s, gi.t));
    v.witness = Solution{std::vector<PathSeq>(static_cast<std::size_t>(gi.p), path)};
  }
  return v;
}

namespace detail {
inline std::int64_t ceil_half(std::int64_t v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }
}  // namespace detail

struct LargeCriteria {
  int case_id = 1;
  std::int64_t k_min = 0;
  std::int64_t k_s = 0, k_t = 0;  // split of k_min between the two ends
};

/// Thresholds for a non-trivial solution on a canonical p-large grid.
inline LargeCriteria criteria_p_large(const GridInstance& gi) {
  gi.validate();
  if (classify(gi) != GridClass::pLarge) throw precondition_error("criteria_p_large needs a p-large grid");
  if (!is_canonical(gi)) throw precondition_error("criteria_p_large needs a canonical instance");
  const RimProfile rs = rim_profile(gi, gi.s), rt = rim_profile(gi, gi.t);
  const std::int64_t cap_s = side_capacity(gi, gi.s, false), cap_t = side_capacity(gi, gi.t, true);
  LargeCriteria c;
  auto deg_part = [&](int deg) { return std::max<std::int64_t>(0, detail::ceil_half(gi.p - deg)); };
  if (gi.p <= cap_s) {
    c.case_id = 1;
    c.k_s = deg_part(rs.deg);
    c.k_t = deg_part(rt.deg);
  } else if (gi.p <= cap_t) {
    c.case_id = 2;
    c.k_s = gi.p - (rs.rho() + 2);
    c.k_t = deg_part(rt.deg);
  } else {
    c.case_id = 3;
    c.k_s = gi.p - (rs.rho() + 2);
    c.k_t = gi.p - (rt.dual() + 2);
  }
  c.k_min = std::max<std::int64_t>(0, c.k_s + c.k_t);
  return c;
}

/// The criteria evaluated on every canonical variant. Variants of one instance
/// can disagree; the largest threshold is kept, so a yes needs every variant
/// to agree, and the answer does not depend on how the input was oriented.
struct Threshold {
  LargeCriteria criteria;
  GridInstance variant;
  Symmetry sym;
};

inline Threshold nontrivial_threshold(const GridInstance& gi) {
  std::optional<Threshold> best;
  for (const auto& [c, sym] : canonical_variants(gi)) {
    const LargeCriteria crit = criteria_p_large(c);
    if (!best || crit.k_min > best->criteria.k_min) best = Threshold{crit, c, sym};
  }
  return *best;
}

/// Linear-time decision; p-narrow grids fall back to the branching solver.
inline GridVerdict decide_grid(const GridInstance& gi, BranchingOptions opt = {}) {
  gi.validate();
  GridVerdict v;
  v.cls = classify(gi);
  if (gi.p == 1) {
    v.answer = true;
    return v;
  }
  switch (v.cls) {
    case GridClass::pSmall:
      return decide_small(gi);
    case GridClass::pLarge: {
      v.trivial = gi.dist() <= gi.k;
      v.answer = v.trivial || gi.k >= nontrivial_threshold(gi).criteria.k_min;
      return v;
    }
    case GridClass::pNarrow: {
      const Instance inst = materialize_grid(gi);
      const SolveReport rep = solve_fpt_branching(inst, opt);
      v.fallback = true;
      v.answer = rep.answer;
      v.witness = rep.witness;
      return v;
    }
  }
  return v;
}

namespace detail {

inline std::vector<Point> ray(Point from, std::int64_t dx, std::int64_t dy, std::int64_t len) {
  std::vector<Point> out{from};
  for (std::int64_t i = 0; i < len; ++i) out.push_back({out.back().x + dx, out.back().y + dy});
  return out;
}

/// Boosts the rays right (a) and up (b) from s and left (c) and down (d) from t.
inline std::optional<std::vector<EdgeId>> ray_boosts(const GridInstance& gi, std::int64_t a, std::int64_t b,
                                                     std::int64_t c, std::int64_t d) {
  if (gi.s.x + a > gi.n - 1 || gi.s.y + b > gi.m - 1 || gi.t.x - c < 0 || gi.t.y - d < 0) return std::nullopt;
  std::vector<EdgeId> out;
  auto add = [&](const std::vector<Point>& pts) {
    for (std::size_t i = 1; i < pts.size(); ++i) out.push_back(grid_edge(gi, pts[i - 1], pts[i]));
  };
  add(ray(gi.s, 1, 0, a));
  add(ray(gi.s, 0, 1, b));
  add(ray(gi.t, -1, 0, c));
  add(ray(gi.t, 0, -1, d));
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) return std::nullopt;  // rays overlap
  return out;
}

}  // namespace detail

/// Witness on a p-large grid: exactly k_min shared edges when k >= k_min,
/// otherwise p copies of a shortest path if that fits. Shared edges form straight rays: right/up from s and left/down from t in the
/// canonical orientation. Ray lengths are found by a flow check over the
/// splits of k_s and k_t; the flow is then decomposed and mapped back.
inline Solution build_witness_p_large(const GridInstance& gi) {
  gi.validate();
  if (classify(gi) != GridClass::pLarge) throw precondition_error("witness builder needs a p-large grid");
  const Threshold th = nontrivial_threshold(gi);
  const GridInstance& c = th.variant;
  const Symmetry& sym = th.sym;
  const LargeCriteria& crit = th.criteria;
  if (gi.k < crit.k_min) {
    if (gi.dist() > gi.k) throw precondition_error("no witness fits the budget");
    Solution trivial;
    trivial.paths.assign(static_cast<std::size_t>(gi.p), grid_path(gi, monotone_route(gi.s, gi.t)));
    return trivial;
  }

  const Instance inst = materialize_grid(c);
  FlowEngine engine(inst);
  std::optional<std::vector<EdgeId>> found;
  auto attempt = [&](std::int64_t a, std::int64_t b, std::int64_t cc, std::int64_t d) {
    auto boosts = detail::ray_boosts(c, a, b, cc, d);
    if (!boosts) return false;
    if (engine.run(boost_mask(inst.graph, *boosts), c.p) < c.p) return false;
    found = std::move(boosts);
    return true;
  };
  const std::int64_t ks = std::max<std::int64_t>(0, crit.k_s), kt = std::max<std::int64_t>(0, crit.k_t);
  for (std::int64_t a = 0; a <= ks && !found; ++a)
    for (std::int64_t cc = 0; cc <= kt && !found; ++cc) attempt(a, ks - a, cc, kt - cc);
  // Wider search over every split, growing the total from k_min up to k.
  std::int64_t tries = 0;
  for (std::int64_t total = crit.k_min; total <= gi.k && !found && tries < 200'000; ++total)
    for (std::int64_t a = 0; a <= total && !found; ++a)
      for (std::int64_t b = 0; a + b <= total && !found; ++b)
        for (std::int64_t cc = 0; a + b + cc <= total && !found; ++cc, ++tries) attempt(a, b, cc, total - a - b - cc);
  if (!found)
    throw error("witness builder found no ray boost set with " + std::to_string(crit.k_min) + " to " +
                std::to_string(gi.k) + " shared edges");

  FlowResult fr{engine.value(), {}, engine.flow()};
  const auto paths = decompose_to_paths(inst, fr, c.p);

  // Map back: canonical points -> original points, reversing paths if s and t swapped.
  const GridInstance& orig = gi;
  Solution out;
  for (const auto& path : paths) {
    std::vector<Point> pts{*inst.graph.coord(inst.s)};
    for (const auto& st : path.steps) pts.push_back(*inst.graph.coord(step_to(inst.graph, st)));
    for (auto& q : pts) q = unapply(sym, orig.n, orig.m, q);
    if (sym.swap) std::reverse(pts.begin(), pts.end());
    out.paths.push_back(grid_path(orig, pts));
  }
  return out;
}

/// Lower bound on the shared count of every solution.
/// Line cuts with fewer than p edges between s and t each force a shared edge;
/// on p-large grids the degree and rectangle-cut arguments bound every
/// non-trivial solution, and the trivial one costs dist(s, t).
inline std::int64_t grid_cut_lower_bound(const GridInstance& gi) {
  gi.validate();
  if (gi.p == 1) return 0;
  std::int64_t lines = 0;
  if (gi.m < gi.p) lines += std::llabs(gi.t.x - gi.s.x);  // column cuts have m edges
  if (gi.n < gi.p) lines += std::llabs(gi.t.y - gi.s.y);  // row cuts have n edges
  if (classify(gi) != GridClass::pLarge) return lines;
  std::int64_t nontrivial = 0;
  for (const auto& [c, sym] : canonical_variants(gi)) {
    const RimProfile rs = rim_profile(c, c.s), rt = rim_profile(c, c.t);
    auto side = [&](int deg, std::int64_t rho) {
      std::int64_t b = std::max<std::int64_t>(0, detail::ceil_half(c.p - deg));
      if (c.p >= 2 * (rho + 2)) b = std::max(b, c.p - 2 - rho);
      return b;
    };
    nontrivial = std::max(nontrivial, side(rs.deg, rs.rho()) + side(rt.deg, rt.dual()));
  }
  return std::max(lines, std::min(gi.dist(), nontrivial));
}

}  // namespace mse
