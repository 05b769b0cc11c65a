#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mse/embedding.hpp"
#include "mse/reductions.hpp"
#include "mse/vc.hpp"
#include "mse/verify.hpp"

namespace mse {

/// Geometry knobs of the vertex-cover compilers. The sound values come from
/// ReductionConstants; demo values are tiny and only good for pictures.
struct LayoutParams {
  std::int64_t M = 0, b = 0;
  std::int64_t a = 0;  // 0 = smallest length that fits
  std::int64_t a0 = 0, c = 10;
  std::int64_t band_min = 1;   // horizontal length of the innermost band
  std::int64_t snake_min = 1;  // minimum snake-chain length
  std::int64_t outer_min = 1;  // minimum outer-grid chain length
};

struct Rainbow {
  std::size_t row = 0;
  std::size_t cell = 0;  // 0: s side, 1..|E|: meta-grid column, |E|+1: t side
  VertexId left = 0, right = 0;
  std::vector<EdgeId> left_spine, bands, right_spine;
};

struct Snake {
  EdgeId edge = 0;
  std::size_t column = 0, from_row = 0, to_row = 0;
  bool upward = false;
};

struct MetaCell {
  std::optional<EdgeId> step;  // Manhattan only: the unit arc v'_{i,j} -> w_{i,j}
  EdgeId chain = 0;
  std::optional<std::size_t> rainbow;
};

struct ReductionTrace {
  std::vector<std::vector<VertexId>> entry;  // v'_{i,j}, j = 0..|E|
  std::vector<std::vector<VertexId>> gate;   // w_{i,j} in the Manhattan variant, else entry
  std::vector<std::vector<MetaCell>> cells;  // [i][j], j < |E|
  std::vector<Rainbow> rainbows;
  std::vector<Snake> snakes;
  std::vector<std::vector<std::optional<std::size_t>>> down, up;  // [gap][column] -> snake index
  std::vector<std::int64_t> row_y;
  std::vector<std::vector<EdgeId>> s_branch, t_branch;  // s -> leaf i, leaf i -> t
  std::vector<EdgeId> s_chain, t_chain;                 // the a-chains
  std::vector<std::size_t> s_rainbow, t_rainbow;
  EdgeId outer_s = 0, outer_t = 0;
};

struct ReductionArtifact {
  Instance instance;
  ReductionConstants constants;
  LayoutParams layout;
  ReductionTrace trace;
  VCInstance source;  // after padding
  bool manhattan = false;
  bool demo = false;
};

struct CompileOptions {
  bool demo = false;
};

namespace detail {

struct SnakeSpec {
  std::int64_t T = 0, B = 0, X = 0, h = 0, g = 0;
  std::size_t column = 0;
  bool upward = false;
};

/// Picks turn depths so that the nested detours of one gap never cross.
/// Returns the deepest leg.
inline std::int64_t place_snakes(std::vector<SnakeSpec>& sn, std::int64_t snake_min) {
  const std::size_t n = sn.size();
  for (std::size_t j = 0; j < n; ++j) {
    auto& s = sn[j];
    s.X = std::max(std::max(s.T, s.B) + 1, ceil_div(snake_min + s.T + s.B, 2));
    if (j > 0) s.X = std::max(s.X, sn[j - 1].X + 1);
  }
  for (std::size_t j = n; j-- > 0;) {
    sn[j].h = 1;
    for (std::size_t l = j + 1; l < n; ++l)
      if (sn[j].X >= sn[l].T) sn[j].h = std::max(sn[j].h, sn[l].h + 1);
  }
  std::int64_t deepest = 0;
  for (std::size_t l = 0; l < n; ++l) {
    sn[l].g = sn[l].h + 1;
    for (std::size_t j = 0; j < l; ++j)
      if (sn[j].X >= sn[l].B) sn[l].g = std::max(sn[l].g, sn[j].g + 1);
    deepest = std::max(deepest, sn[l].g);
  }
  return deepest;
}

class HoleyBuilder {
 public:
  HoleyBuilder(const VCInstance& vc, LayoutParams& lp, bool manhattan)
      : vc_(vc), lp_(lp), manhattan_(manhattan), g_(manhattan ? Mode::directed : Mode::undirected) {}

  Graph& graph() { return g_; }
  ReductionTrace& trace() { return tr_; }
  VertexId s() const { return s_; }
  VertexId t() const { return t_; }

  void build() {
    const std::size_t V = vc_.graph.vertex_count(), E = vc_.graph.edge_count();
    const std::int64_t h = log2_exact(V), M = lp_.M, step = manhattan_ ? 1 : 0;

    std::vector<std::vector<char>> incident(V, std::vector<char>(E, 0));
    for (std::size_t j = 0; j < E; ++j) {
      incident[vc_.graph.edge(j).tail][j] = 1;
      incident[vc_.graph.edge(j).head][j] = 1;
    }

    // Horizontal offsets of v'_{i,j} relative to the first column.
    std::vector<std::vector<std::int64_t>> off(V, std::vector<std::int64_t>(E + 1, 0));
    for (std::size_t i = 0; i < V; ++i)
      for (std::size_t j = 0; j < E; ++j)
        off[i][j + 1] = off[i][j] + step + lp_.b + (incident[i][j] ? 0 : 2 * M + lp_.band_min);

    // Snake detours per gap; the gap height adapts when nesting gets deep.
    std::vector<std::vector<SnakeSpec>> gaps(V - 1);
    std::vector<std::int64_t> gap_height(V - 1);
    for (std::size_t i = 0; i + 1 < V; ++i) {
      auto& sn = gaps[i];
      for (std::size_t j = 0; j <= E; ++j) {
        sn.push_back({off[i][j], off[i + 1][j], 0, 0, 0, j, false});
        if (manhattan_ && j < E) sn.push_back({off[i][j] + 1, off[i + 1][j] + 1, 0, 0, 0, j, true});
      }
      const std::int64_t deepest = place_snakes(sn, lp_.snake_min);
      gap_height[i] = M + std::max(lp_.c, deepest + 1);
    }
    tr_.row_y.assign(V, 0);
    for (std::size_t i = 0; i + 1 < V; ++i) tr_.row_y[i + 1] = tr_.row_y[i] - gap_height[i];

    // Leaves sit two apart; the top one is a0 below the first row.
    const std::int64_t ys = tr_.row_y[0] - lp_.a0 - static_cast<std::int64_t>(V - 1);
    std::vector<std::int64_t> leaf_y(V), d(V), r(V);
    std::size_t ups = 0;
    for (std::size_t i = 0; i < V; ++i) {
      leaf_y[i] = ys + static_cast<std::int64_t>(V - 1) - 2 * static_cast<std::int64_t>(i);
      d[i] = tr_.row_y[i] - leaf_y[i];
      if (d[i] >= 0) ++ups;
    }
    for (std::size_t i = 0; i < V; ++i)
      r[i] = i < ups ? static_cast<std::int64_t>(i) : static_cast<std::int64_t>(V - 1 - i);
    std::int64_t need_a = 0;
    for (std::size_t i = 0; i < V; ++i) need_a = std::max(need_a, r[i] + std::abs(d[i]) + 1);
    if (lp_.a == 0) lp_.a = need_a + 1;
    if (lp_.a < need_a) throw precondition_error("chain length a is too short for the layout");
    const std::int64_t a = lp_.a;

    const std::int64_t sx = 0, hx = h;
    std::int64_t min_abs_d = std::abs(d[0]);
    for (auto v : d) min_abs_d = std::min(min_abs_d, std::abs(v));
    const std::int64_t X1 = hx + a - min_abs_d + 2 * M + lp_.band_min;

    std::int64_t far_right = X1;
    for (auto& sn : gaps)
      for (auto& s : sn) {
        s.T += X1;
        s.B += X1;
        s.X += X1;
        far_right = std::max(far_right, s.X);
      }
    std::int64_t max_r = 0;
    for (auto v : r) max_r = std::max(max_r, v);
    std::int64_t tx = far_right + h + max_r + 2;
    for (std::size_t i = 0; i < V; ++i)
      tx = std::max(tx, X1 + off[i][E] + 2 * M + lp_.band_min + h + a - std::abs(d[i]));

    // Vertices: s, t, then everything else in construction order.
    s_ = g_.add_vertex(Point{sx, ys});
    t_ = g_.add_vertex(Point{tx, ys});

    // Binary trees. Level-d node q sits at height ys + V - 2^{h-d}(2q+1).
    auto node_y = [&](std::int64_t dd, std::int64_t q) {
      return ys + static_cast<std::int64_t>(V) - (std::int64_t{1} << (h - dd)) * (2 * q + 1);
    };
    std::vector<VertexId> s_leaf(V), t_leaf(V);
    tr_.s_branch.assign(V, {});
    tr_.t_branch.assign(V, {});
    {
      std::vector<VertexId> level{s_}, tlevel{t_};
      std::vector<std::vector<EdgeId>> sp(1), tp(1);
      for (std::int64_t dd = 0; dd < h; ++dd) {
        std::vector<VertexId> next, tnext;
        std::vector<std::vector<EdgeId>> nsp, ntp;
        for (std::size_t q = 0; q < level.size(); ++q) {
          const std::int64_t py = node_y(dd, static_cast<std::int64_t>(q));
          for (std::int64_t c = 0; c < 2; ++c) {
            const std::int64_t cq = 2 * static_cast<std::int64_t>(q) + c, cy = node_y(dd + 1, cq);
            const VertexId sv = g_.add_vertex(Point{sx + dd + 1, cy});
            const VertexId tv = g_.add_vertex(Point{tx - dd - 1, cy});
            auto se = chain(level[q], sv, {{sx + dd, py}, {sx + dd, cy}, {sx + dd + 1, cy}});
            auto te = chain(tv, tlevel[q], {{tx - dd - 1, cy}, {tx - dd, cy}, {tx - dd, py}});
            next.push_back(sv);
            tnext.push_back(tv);
            nsp.push_back(sp[q]);
            nsp.back().push_back(se);
            ntp.push_back(tp[q]);
            ntp.back().insert(ntp.back().begin(), te);
          }
        }
        level = std::move(next);
        tlevel = std::move(tnext);
        sp = std::move(nsp);
        tp = std::move(ntp);
      }
      for (std::size_t i = 0; i < V; ++i) {
        s_leaf[i] = level[i];
        t_leaf[i] = tlevel[i];
        tr_.s_branch[i] = sp[i];
        tr_.t_branch[i] = tp[i];
      }
    }

    // Meta-grid vertices.
    tr_.entry.assign(V, std::vector<VertexId>(E + 1));
    tr_.gate.assign(V, std::vector<VertexId>(E + 1));
    for (std::size_t i = 0; i < V; ++i)
      for (std::size_t j = 0; j <= E; ++j) {
        const Point p{X1 + off[i][j], tr_.row_y[i]};
        tr_.entry[i][j] = g_.add_vertex(p);
        tr_.gate[i][j] = manhattan_ && j < E ? g_.add_vertex(Point{p.x + 1, p.y}) : tr_.entry[i][j];
      }

    // s side: a-chain then rainbow into the first column.
    tr_.s_chain.resize(V);
    tr_.s_rainbow.resize(V);
    for (std::size_t i = 0; i < V; ++i) {
      const std::int64_t y = tr_.row_y[i], ax = hx + a - std::abs(d[i]);
      const VertexId A = g_.add_vertex(Point{ax, y});
      tr_.s_chain[i] = chain(s_leaf[i], A, {{hx, leaf_y[i]}, {hx + r[i], leaf_y[i]}, {hx + r[i], y}, {ax, y}});
      tr_.s_rainbow[i] = rainbow(A, tr_.entry[i][0], i, 0);
    }

    // Rows.
    tr_.cells.assign(V, std::vector<MetaCell>(E));
    for (std::size_t i = 0; i < V; ++i)
      for (std::size_t j = 0; j < E; ++j) {
        MetaCell& cell = tr_.cells[i][j];
        const VertexId from = tr_.gate[i][j], to = tr_.entry[i][j + 1];
        if (manhattan_) cell.step = g_.add_edge(tr_.entry[i][j], from);
        const Point p = *g_.coord(from);
        if (incident[i][j]) {
          cell.chain = chain(from, to, {p, *g_.coord(to)});
        } else {
          const VertexId A = g_.add_vertex(Point{p.x + lp_.b, p.y});
          cell.chain = chain(from, A, {p, *g_.coord(A)});
          cell.rainbow = rainbow(A, to, i, j + 1);
        }
      }

    // t side: rainbow out of the last column, then the a-chain to a leaf.
    tr_.t_chain.resize(V);
    tr_.t_rainbow.resize(V);
    for (std::size_t i = 0; i < V; ++i) {
      const std::int64_t y = tr_.row_y[i], bx = tx - h - a + std::abs(d[i]);
      const VertexId B = g_.add_vertex(Point{bx, y});
      tr_.t_rainbow[i] = rainbow(tr_.entry[i][E], B, i, E + 1);
      tr_.t_chain[i] = chain(B, t_leaf[i], {{bx, y}, {tx - h - r[i], y}, {tx - h - r[i], leaf_y[i]}, {tx - h, leaf_y[i]}});
    }

    // Snakes.
    tr_.down.assign(V - 1, std::vector<std::optional<std::size_t>>(E + 1));
    tr_.up = tr_.down;
    for (std::size_t i = 0; i + 1 < V; ++i) {
      const std::int64_t y0 = tr_.row_y[i], y1 = tr_.row_y[i + 1];
      for (const auto& s : gaps[i]) {
        std::vector<Point> pts{{s.T, y0}, {s.T, y0 - s.h}, {s.X, y0 - s.h}, {s.X, y0 - s.g}, {s.B, y0 - s.g}, {s.B, y1}};
        Snake sn;
        sn.column = s.column;
        sn.upward = s.upward;
        if (s.upward) {
          std::reverse(pts.begin(), pts.end());
          sn.edge = chain(tr_.gate[i + 1][s.column], tr_.gate[i][s.column], pts);
          sn.from_row = i + 1;
          sn.to_row = i;
          tr_.up[i][s.column] = tr_.snakes.size();
        } else {
          sn.edge = chain(tr_.entry[i][s.column], tr_.entry[i + 1][s.column], pts);
          sn.from_row = i;
          sn.to_row = i + 1;
          tr_.down[i][s.column] = tr_.snakes.size();
        }
        tr_.snakes.push_back(sn);
      }
    }

    // Outer-grid chains, padded sideways until they are long enough.
    {
      const std::int64_t y0 = tr_.row_y[0];
      const std::int64_t top = std::max(y0 + M, ys + static_cast<std::int64_t>(V) - 1) + 1;
      const std::int64_t rest = (top - ys) + (X1 - sx) + (top - y0);
      const std::int64_t L = std::max<std::int64_t>(1, ceil_div(lp_.outer_min - rest, 2));
      tr_.outer_s = chain(s_, tr_.entry[0][0], {{sx, ys}, {sx - L, ys}, {sx - L, top}, {X1, top}, {X1, y0}});
    }
    {
      const std::int64_t yl = tr_.row_y[V - 1], xe = X1 + off[V - 1][E];
      const std::int64_t bottom = std::min(yl, ys - static_cast<std::int64_t>(V) + 1) - 1;
      const std::int64_t rest = (yl - bottom) + (tx - xe) + (ys - bottom);
      const std::int64_t L = std::max<std::int64_t>(1, ceil_div(lp_.outer_min - rest, 2));
      tr_.outer_t = chain(tr_.entry[V - 1][E], t_, {{xe, yl}, {xe, bottom}, {tx + L, bottom}, {tx + L, ys}, {tx, ys}});
    }
  }

 private:
  EdgeId chain(VertexId u, VertexId v, std::vector<Point> pts) {
    if (pts.front() != *g_.coord(u) || pts.back() != *g_.coord(v))
      throw error("layout: polyline does not meet its endpoints");
    const auto len = polyline_length(pts);
    if (!len || *len < 1) throw error("layout: bad polyline");
    if (*len == 1) return g_.add_edge(u, v);
    return g_.add_edge(u, v, *len, std::move(pts));
  }

  // M bands nested over a spine of M unit edges on each side.
  std::size_t rainbow(VertexId left, VertexId right, std::size_t row, std::size_t cell) {
    const std::int64_t M = lp_.M;
    const Point A = *g_.coord(left), B = *g_.coord(right);
    if (B.y != A.y || B.x - A.x < 2 * M + 1) throw error("layout: rainbow too narrow");
    Rainbow rb{row, cell, left, right, {}, {}, {}};
    std::vector<VertexId> lv{left}, rv;
    for (std::int64_t j = 1; j <= M; ++j) lv.push_back(g_.add_vertex(Point{A.x + j, A.y}));
    for (std::int64_t j = M; j >= 1; --j) rv.push_back(g_.add_vertex(Point{B.x - j, B.y}));
    rv.push_back(right);
    for (std::int64_t j = 0; j < M; ++j) rb.left_spine.push_back(g_.add_edge(lv[j], lv[j + 1]));
    for (std::int64_t j = 1; j <= M; ++j) {
      const std::int64_t top = A.y + M + 1 - j;
      const VertexId u = lv[j], v = rv[M - j];
      rb.bands.push_back(chain(u, v, {{A.x + j, A.y}, {A.x + j, top}, {B.x - j, top}, {B.x - j, A.y}}));
    }
    for (std::int64_t j = 0; j < M; ++j) rb.right_spine.push_back(g_.add_edge(rv[j], rv[j + 1]));
    tr_.rainbows.push_back(std::move(rb));
    return tr_.rainbows.size() - 1;
  }

  const VCInstance& vc_;
  LayoutParams& lp_;
  bool manhattan_;
  Graph g_;
  ReductionTrace tr_;
  VertexId s_ = 0, t_ = 0;
};

inline ReductionArtifact compile_vc(const VCInstance& input, bool manhattan, const CompileOptions& opt) {
  if (input.graph.directed()) throw precondition_error("vertex cover graph must be undirected");
  if (input.max_degree() > 3) throw precondition_error("vertex cover graph must have maximum degree three");
  for (const auto& e : input.graph.edges())
    if (e.length != 1) throw precondition_error("vertex cover graph must have unit edges");
  ReductionArtifact art;
  art.source = pad_to_power_of_two(input);
  art.manhattan = manhattan;
  art.demo = opt.demo;
  art.constants = reduction_constants(art.source);
  const auto& C = art.constants;
  const std::int64_t c = manhattan ? C.cManhattan : C.c;
  LayoutParams lp;
  if (opt.demo) {
    lp.M = 3;
    lp.b = 3;
    lp.a = 0;
    lp.band_min = 2;
    lp.snake_min = 4;
    lp.outer_min = 4;
  } else {
    lp.M = C.M;
    lp.b = C.b;
    lp.a = C.a;
    lp.band_min = C.kPrime - 1;  // innermost band then has kPrime + 1 unit edges
    lp.snake_min = C.kPrime + 1;
    lp.outer_min = C.kPrime + 1;
  }
  lp.c = c;
  const std::int64_t V = static_cast<std::int64_t>(art.source.graph.vertex_count());
  lp.a0 = ceil_div((V - 1) * (lp.M + c - 2), 2) - log2_exact(art.source.graph.vertex_count());

  HoleyBuilder hb(art.source, lp, manhattan);
  hb.build();
  art.layout = lp;
  art.trace = std::move(hb.trace());
  art.instance.graph = std::move(hb.graph());
  art.instance.s = hb.s();
  art.instance.t = hb.t();
  const std::int64_t k = art.source.k, E = static_cast<std::int64_t>(art.source.graph.edge_count());
  if (opt.demo) {
    // Same accounting as the sound budget, with the demo lengths plugged in.
    art.instance.p = k * lp.M + (V - k) + 1;
    art.instance.k = k * (2 * lp.a + lp.b * E) + C.trees + C.cPrime * (2 * lp.M - 2) + (manhattan ? k * E : 0);
  } else {
    art.instance.p = C.p;
    art.instance.k = manhattan ? C.kDoublePrime : C.kPrime;
  }
  return art;
}

}  // namespace detail

/// Vertex Cover (max degree three) -> MSE on a holey grid.
inline ReductionArtifact vc_to_holey_grid(const VCInstance& vc, const CompileOptions& opt = {}) {
  return detail::compile_vc(vc, false, opt);
}

/// Vertex Cover (max degree three) -> DMSE on a Manhattan DAG.
inline ReductionArtifact vc_to_manhattan_dag(const VCInstance& vc, const CompileOptions& opt = {}) {
  return detail::compile_vc(vc, true, opt);
}

inline bool is_acyclic(const Graph& g) {
  if (!g.directed()) return false;
  std::vector<std::size_t> indeg(g.vertex_count(), 0);
  for (const auto& e : g.edges()) ++indeg[e.head];
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (!indeg[v]) stack.push_back(v);
  std::size_t seen = 0;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& inc : g.incident(v))
      if (inc.forward && --indeg[inc.other] == 0) stack.push_back(inc.other);
  }
  return seen == g.vertex_count();
}

// ---------------------------------------------------------------- forward witness

/// Shared unit edges of the forward witness, split by gadget.
struct SharedBreakdown {
  std::int64_t trees = 0, a_chains = 0, b_chains = 0, rainbows = 0, steps = 0;
  std::int64_t total() const { return trees + a_chains + b_chains + rainbows + steps; }
};

namespace detail {

inline std::vector<VertexId> normalize_cover(const ReductionArtifact& art, std::vector<VertexId> cover) {
  const Graph& g = art.source.graph;
  std::sort(cover.begin(), cover.end());
  cover.erase(std::unique(cover.begin(), cover.end()), cover.end());
  for (VertexId v : cover)
    if (v >= g.vertex_count()) throw precondition_error("cover names unknown vertex " + std::to_string(v));
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const auto& e = g.edge(j);
    if (!std::binary_search(cover.begin(), cover.end(), e.tail) && !std::binary_search(cover.begin(), cover.end(), e.head))
      throw precondition_error("not a vertex cover: edge e" + std::to_string(j + 1) + " = {" + std::to_string(e.tail) +
                               ", " + std::to_string(e.head) + "} is uncovered, so no row carries column " +
                               std::to_string(j + 1));
  }
  const auto k = static_cast<std::size_t>(art.source.k);
  if (cover.size() > k)
    throw precondition_error("cover has " + std::to_string(cover.size()) + " vertices but k = " + std::to_string(k));
  // Pad with the smallest unused vertices.
  for (VertexId v = 0; cover.size() < k; ++v)
    if (!std::binary_search(cover.begin(), cover.end(), v)) {
      cover.push_back(v);
      std::sort(cover.begin(), cover.end());
    }
  return cover;
}

inline void append_rainbow(std::vector<EdgeId>& out, const Rainbow& rb, std::size_t band) {
  const std::size_t M = rb.bands.size();
  out.insert(out.end(), rb.left_spine.begin(), rb.left_spine.begin() + static_cast<std::ptrdiff_t>(band + 1));
  out.push_back(rb.bands[band]);
  out.insert(out.end(), rb.right_spine.begin() + static_cast<std::ptrdiff_t>(M - band - 1), rb.right_spine.end());
}

}  // namespace detail

/// Routes M paths through every cover row, one through every other row, and a
/// validation path along the outer chains and snakes.
inline Solution synthesize_holey_witness(const ReductionArtifact& art, const std::vector<VertexId>& cover_in) {
  const auto cover = detail::normalize_cover(art, cover_in);
  const ReductionTrace& tr = art.trace;
  const Graph& g = art.instance.graph;
  const std::size_t V = tr.entry.size(), E = tr.cells.empty() ? 0 : tr.cells[0].size();
  const std::size_t M = static_cast<std::size_t>(art.layout.M);
  std::vector<char> in_cover(V, 0);
  for (VertexId v : cover) in_cover[v] = 1;

  Solution sol;
  for (std::size_t i = 0; i < V; ++i) {
    const std::size_t count = in_cover[i] ? M : 1;
    for (std::size_t q = 0; q < count; ++q) {
      const std::size_t band = in_cover[i] ? q : M - 1;
      std::vector<EdgeId> es = tr.s_branch[i];
      es.push_back(tr.s_chain[i]);
      detail::append_rainbow(es, tr.rainbows[tr.s_rainbow[i]], band);
      for (std::size_t j = 0; j < E; ++j) {
        const MetaCell& cell = tr.cells[i][j];
        if (cell.step) es.push_back(*cell.step);
        es.push_back(cell.chain);
        if (cell.rainbow) detail::append_rainbow(es, tr.rainbows[*cell.rainbow], band);
      }
      detail::append_rainbow(es, tr.rainbows[tr.t_rainbow[i]], band);
      es.push_back(tr.t_chain[i]);
      es.insert(es.end(), tr.t_branch[i].begin(), tr.t_branch[i].end());
      sol.paths.push_back(make_path(g, art.instance.s, es));
    }
  }

  // Validation path: cross column j on a row whose vertex covers e_j.
  std::vector<EdgeId> es{tr.outer_s};
  std::size_t row = 0;
  auto move_down = [&](std::size_t j, std::size_t to) {
    for (; row < to; ++row) es.push_back(tr.snakes[*tr.down[row][j]].edge);
  };
  for (std::size_t j = 0; j < E; ++j) {
    const auto& e = art.source.graph.edge(j);
    const std::size_t target = in_cover[e.tail] ? e.tail : e.head;
    const MetaCell& cell = tr.cells[target][j];
    if (target >= row) {
      move_down(j, target);
      if (cell.step) es.push_back(*cell.step);
    } else if (art.manhattan) {
      es.push_back(*tr.cells[row][j].step);
      for (; row > target; --row) es.push_back(tr.snakes[*tr.up[row - 1][j]].edge);
    } else {
      for (; row > target; --row) es.push_back(tr.snakes[*tr.down[row - 1][j]].edge);
    }
    es.push_back(cell.chain);
  }
  move_down(E, V - 1);
  es.push_back(tr.outer_t);
  sol.paths.push_back(make_path(g, art.instance.s, es));
  return sol;
}

/// What the forward witness is expected to share, gadget by gadget.
inline SharedBreakdown forward_breakdown(const ReductionArtifact& art, const std::vector<VertexId>& cover_in) {
  const auto cover = detail::normalize_cover(art, cover_in);
  const ReductionTrace& tr = art.trace;
  const Graph& g = art.instance.graph;
  const Solution sol = synthesize_holey_witness(art, cover);
  std::set<EdgeId> tree_edges, a_edges, b_edges, step_edges;
  for (const auto& br : tr.s_branch) tree_edges.insert(br.begin(), br.end());
  for (const auto& br : tr.t_branch) tree_edges.insert(br.begin(), br.end());
  a_edges.insert(tr.s_chain.begin(), tr.s_chain.end());
  a_edges.insert(tr.t_chain.begin(), tr.t_chain.end());
  for (const auto& row : tr.cells)
    for (const auto& c : row) {
      b_edges.insert(c.chain);
      if (c.step) step_edges.insert(*c.step);
    }
  SharedBreakdown out;
  for (EdgeId e : shared_edges(sol)) {
    const std::int64_t len = g.length(e);
    if (tree_edges.count(e)) out.trees += len;
    else if (a_edges.count(e)) out.a_chains += len;
    else if (b_edges.count(e)) out.b_chains += len;
    else if (step_edges.count(e)) out.steps += len;
    else out.rainbows += len;
  }
  return out;
}

// ---------------------------------------------------------------- trace file

inline std::string write_trace(const ReductionArtifact& art) {
  const ReductionTrace& tr = art.trace;
  std::ostringstream out;
  out << "trace 1\n";
  out << "variant " << (art.manhattan ? "manhattan" : "holey") << (art.demo ? " demo" : " sound") << "\n";
  for (std::size_t i = 0; i < tr.entry.size(); ++i) {
    out << "row " << i;
    for (VertexId v : tr.entry[i]) out << " " << v;
    out << "\n";
  }
  for (std::size_t r = 0; r < tr.rainbows.size(); ++r)
    out << "rainbow " << r << " " << tr.rainbows[r].row << "," << tr.rainbows[r].cell << "\n";
  for (std::size_t i = 0; i < tr.snakes.size(); ++i) {
    const auto& s = tr.snakes[i];
    out << "snake " << i << " " << s.from_row << " " << s.to_row << " column " << s.column << " edge " << s.edge << "\n";
  }
  out << "outer s " << tr.outer_s << "\nouter t " << tr.outer_t << "\n";
  for (std::size_t i = 0; i < tr.s_chain.size(); ++i) {
    out << "leaf " << i << " s-chain " << tr.s_chain[i] << " t-chain " << tr.t_chain[i] << " s-branch";
    for (EdgeId e : tr.s_branch[i]) out << " " << e;
    out << " t-branch";
    for (EdgeId e : tr.t_branch[i]) out << " " << e;
    out << "\n";
  }
  return out.str();
}

}  // namespace mse
