#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mse/graph.hpp"
#include "mse/verify.hpp"

namespace mse {

enum class RenderFormat { svg, dot };

struct RenderSpec {
  std::int64_t scale = 10;  // pixels per lattice unit
  bool edges = true;
  bool chains_collapsed = false;  // draw each chain as one straight tail-head segment
  bool labels = false;
  bool highlight_solution = true;
  RenderFormat format = RenderFormat::svg;

  void validate() const {
    if (scale < 1) throw precondition_error("render scale must be at least 1");
  }
};

namespace detail {

// 0 unused, 1 used by one path, 2 shared.
inline std::vector<int> edge_usage(const Graph& g, const std::optional<Solution>& sol, bool enabled) {
  std::vector<int> use(g.edge_count(), 0);
  if (!sol || !enabled) return use;
  for (const auto& path : sol->paths)
    for (const auto& st : path.steps) {
      if (st.edge >= g.edge_count()) throw precondition_error("solution references unknown edge " + std::to_string(st.edge));
      use[st.edge] = std::max(use[st.edge], 1);
    }
  for (EdgeId e : shared_edges(*sol)) use[e] = 2;
  return use;
}

inline std::vector<Point> drawn_polyline(const Graph& g, EdgeId id, bool collapsed) {
  const auto& e = g.edge(id);
  if (!collapsed && e.has_polyline()) return e.corners;
  const auto& a = g.coord(e.tail);
  const auto& b = g.coord(e.head);
  if (!a || !b) throw precondition_error("edge " + std::to_string(id) + " has no embedding");
  return {*a, *b};
}

inline const char* usage_class(int u) { return u == 2 ? "shared" : u == 1 ? "used" : "plain"; }

inline std::string render_svg(const Instance& inst, const std::optional<Solution>& sol, const RenderSpec& spec) {
  const Graph& g = inst.graph;
  if (!g.has_all_coords()) throw precondition_error("SVG rendering needs coordinates for every vertex");
  const auto use = edge_usage(g, sol, spec.highlight_solution);

  std::vector<std::vector<Point>> lines;
  std::int64_t x0 = std::numeric_limits<std::int64_t>::max(), y0 = x0;
  std::int64_t x1 = std::numeric_limits<std::int64_t>::min(), y1 = x1;
  auto grow = [&](Point q) {
    x0 = std::min(x0, q.x), x1 = std::max(x1, q.x);
    y0 = std::min(y0, q.y), y1 = std::max(y1, q.y);
  };
  for (VertexId v = 0; v < g.vertex_count(); ++v) grow(*g.coord(v));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    lines.push_back(drawn_polyline(g, e, spec.chains_collapsed));
    for (Point q : lines.back()) grow(q);
  }
  if (g.vertex_count() == 0) x0 = y0 = x1 = y1 = 0;

  const std::int64_t s = spec.scale, pad = 2 * s;
  const std::int64_t w = (x1 - x0) * s + 2 * pad, h = (y1 - y0) * s + 2 * pad;
  // Lattice y grows upward; SVG y grows downward.
  auto X = [&](Point q) { return (q.x - x0) * s + pad; };
  auto Y = [&](Point q) { return (y1 - q.y) * s + pad; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
      << "<style>line{stroke-linecap:round}.plain{stroke:#999;stroke-width:1}"
         ".used{stroke:#2b6cb0;stroke-width:2}.shared{stroke:#c53030;stroke-width:4}"
         "text{font:10px monospace}</style>\n";
  if (spec.edges) {
    out << "<g id=\"edges\">\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& pts = lines[e];
      for (std::size_t i = 1; i < pts.size(); ++i)
        out << "<line class=\"" << usage_class(use[e]) << "\" data-edge=\"" << e << "\" x1=\"" << X(pts[i - 1])
            << "\" y1=\"" << Y(pts[i - 1]) << "\" x2=\"" << X(pts[i]) << "\" y2=\"" << Y(pts[i]) << "\"/>\n";
    }
    out << "</g>\n";
  }
  const std::int64_t r = std::max<std::int64_t>(2, s / 3);
  out << "<g id=\"terminals\">\n";
  for (VertexId v : {inst.s, inst.t})
    if (v < g.vertex_count())
      out << "<circle cx=\"" << X(*g.coord(v)) << "\" cy=\"" << Y(*g.coord(v)) << "\" r=\"" << r
          << "\" fill=\"" << (v == inst.s ? "#2f855a" : "#b7791f") << "\"/>\n";
  out << "</g>\n";
  if (spec.labels) {
    out << "<g id=\"labels\">\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      out << "<text x=\"" << X(*g.coord(v)) + r << "\" y=\"" << Y(*g.coord(v)) - r << "\">" << v << "</text>\n";
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

inline std::string render_dot(const Instance& inst, const std::optional<Solution>& sol, const RenderSpec& spec) {
  const Graph& g = inst.graph;
  const auto use = edge_usage(g, sol, spec.highlight_solution);
  const char* arrow = g.directed() ? " -> " : " -- ";
  std::ostringstream out;
  out << (g.directed() ? "digraph" : "graph") << " mse {\n  node [shape=circle];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [";
    if (v == inst.s || v == inst.t) out << "shape=doublecircle, ";
    out << "label=\"" << (v == inst.s ? "s" : v == inst.t ? "t" : spec.labels ? std::to_string(v) : "") << "\"";
    if (const auto& c = g.coord(v)) out << ", pos=\"" << c->x << "," << c->y << "!\"";
    out << "];\n";
  }
  if (spec.edges)
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      const auto& se = g.edge(e);
      out << "  " << se.tail << arrow << se.head << " [id=\"e" << e << "\"";
      if (se.length > 1) out << ", label=\"" << se.length << "\"";
      if (use[e] == 2) out << ", color=red, penwidth=3";
      if (use[e] == 1) out << ", color=blue";
      out << "];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace detail

/// Deterministic SVG 1.1 or DOT text. SVG needs every vertex embedded.
inline std::string render_embedding(const Instance& inst, const std::optional<Solution>& sol = std::nullopt,
                                    const RenderSpec& spec = {}) {
  spec.validate();
  return spec.format == RenderFormat::svg ? detail::render_svg(inst, sol, spec) : detail::render_dot(inst, sol, spec);
}

}  // namespace mse
