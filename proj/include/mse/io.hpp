#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mse/graph.hpp"

namespace mse {

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

/// Splits text into non-empty lines of whitespace-separated tokens; `#` starts a comment.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(pos, end - pos);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

inline std::int64_t to_int(const Line& l, std::size_t i) {
  if (i >= l.tokens.size()) throw parse_error(l.number, "missing field after '" + l.tokens[0] + "'");
  const std::string& s = l.tokens[i];
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) throw parse_error(l.number, "not an integer: '" + s + "'");
  return v;
}

inline void expect_arity(const Line& l, std::size_t n) {
  if (l.tokens.size() != n)
    throw parse_error(l.number, "'" + l.tokens[0] + "' expects " + std::to_string(n - 1) + " field(s)");
}

inline VertexId to_vertex(const Line& l, std::size_t i, std::size_t count) {
  const auto v = to_int(l, i);
  if (v < 0 || static_cast<std::uint64_t>(v) >= count)
    throw parse_error(l.number, "unknown vertex " + std::to_string(v));
  return static_cast<VertexId>(v);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

/// Parses the line-oriented instance format (`mse 1` header).
inline Instance parse_instance(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"mse", "1"})
    throw parse_error(lines.empty() ? 0 : lines[0].number, "expected header 'mse 1'");

  std::optional<Mode> mode;
  std::optional<std::int64_t> count, s, t, p, k;
  Instance inst;
  auto need_graph = [&](const detail::Line& l) {
    if (!mode || !count) throw parse_error(l.number, "'mode' and 'vertices' must precede '" + l.tokens[0] + "'");
  };
  auto once = [](const detail::Line& l, auto& slot, auto value) {
    if (slot) throw parse_error(l.number, "duplicate '" + l.tokens[0] + "'");
    slot = value;
  };

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    const std::string& key = l.tokens[0];
    if (key == "mode") {
      detail::expect_arity(l, 2);
      if (l.tokens[1] == "undirected") once(l, mode, Mode::undirected);
      else if (l.tokens[1] == "directed") once(l, mode, Mode::directed);
      else throw parse_error(l.number, "unknown mode '" + l.tokens[1] + "'");
      if (count) inst.graph = Graph(*mode, static_cast<std::size_t>(*count));
    } else if (key == "vertices") {
      detail::expect_arity(l, 2);
      const auto n = detail::to_int(l, 1);
      if (n < 2) throw parse_error(l.number, "need at least two vertices");
      once(l, count, n);
      if (mode) inst.graph = Graph(*mode, static_cast<std::size_t>(n));
    } else if (key == "s" || key == "t" || key == "p" || key == "k") {
      detail::expect_arity(l, 2);
      const auto v = detail::to_int(l, 1);
      once(l, key == "s" ? s : key == "t" ? t : key == "p" ? p : k, v);
    } else if (key == "coord") {
      need_graph(l);
      detail::expect_arity(l, 4);
      const VertexId v = detail::to_vertex(l, 1, inst.graph.vertex_count());
      if (inst.graph.coord(v)) throw parse_error(l.number, "duplicate coord for vertex " + std::to_string(v));
      inst.graph.set_coord(v, {detail::to_int(l, 2), detail::to_int(l, 3)});
    } else if (key == "edge") {
      need_graph(l);
      detail::expect_arity(l, 3);
      const VertexId u = detail::to_vertex(l, 1, inst.graph.vertex_count());
      const VertexId v = detail::to_vertex(l, 2, inst.graph.vertex_count());
      if (u == v) throw parse_error(l.number, "self-loop on vertex " + std::to_string(u));
      inst.graph.add_edge(u, v);
    } else if (key == "chain") {
      need_graph(l);
      if (l.tokens.size() < 4) throw parse_error(l.number, "'chain' expects u v len [points]");
      const VertexId u = detail::to_vertex(l, 1, inst.graph.vertex_count());
      const VertexId v = detail::to_vertex(l, 2, inst.graph.vertex_count());
      if (u == v) throw parse_error(l.number, "self-loop on vertex " + std::to_string(u));
      const auto len = detail::to_int(l, 3);
      if (len < 1) throw parse_error(l.number, "chain length must be positive");
      std::size_t first = 4;
      const bool corner_style = l.tokens.size() > 4 && l.tokens[4] == "corners";
      if (corner_style) ++first;
      if ((l.tokens.size() - first) % 2 != 0) throw parse_error(l.number, "odd number of coordinates");
      std::vector<Point> pts;
      for (std::size_t j = first; j < l.tokens.size(); j += 2)
        pts.push_back({detail::to_int(l, j), detail::to_int(l, j + 1)});
      if (corner_style) {
        if (pts.size() < 2) throw parse_error(l.number, "corner polyline needs two points");
        const auto plen = polyline_length(pts);
        if (!plen) throw parse_error(l.number, "polyline segment is not axis-aligned");
        if (*plen != len) throw parse_error(l.number, "polyline length differs from chain length");
      } else if (!pts.empty()) {
        if (static_cast<std::int64_t>(pts.size()) != len + 1)
          throw parse_error(l.number, "polyline needs len+1 points");
        std::set<Point> seen;
        for (std::size_t j = 0; j < pts.size(); ++j) {
          if (j > 0 && l1(pts[j - 1], pts[j]) != 1) throw parse_error(l.number, "polyline step is not a unit step");
          if (!seen.insert(pts[j]).second) throw parse_error(l.number, "polyline revisits a point");
        }
      }
      inst.graph.add_edge(u, v, len, pts);
    } else {
      throw parse_error(l.number, "unknown keyword '" + key + "'");
    }
  }
  const std::size_t last = lines.back().number;
  if (!mode) throw parse_error(last, "missing 'mode'");
  if (!count) throw parse_error(last, "missing 'vertices'");
  if (!s || !t || !p || !k) throw parse_error(last, "missing one of s, t, p, k");
  if (*s < 0 || *s >= *count || *t < 0 || *t >= *count) throw parse_error(last, "unknown vertex for s or t");
  if (*s == *t) throw parse_error(last, "s and t must differ");
  if (*p < 1) throw parse_error(last, "p must be positive");
  if (*k < 0) throw parse_error(last, "k must be non-negative");
  inst.s = static_cast<VertexId>(*s);
  inst.t = static_cast<VertexId>(*t);
  inst.p = *p;
  inst.k = *k;
  return inst;
}

enum class PolylineStyle { points, corners };

/// Serializes in canonical order. Unit edges without a polyline become `edge`
/// lines; everything else becomes `chain`. With `corners` style only turning
/// points are written, which keeps very long chains small.
inline std::string write_instance(const Instance& inst, PolylineStyle style = PolylineStyle::points) {
  const Graph& g = inst.graph;
  std::ostringstream out;
  out << "mse 1\n"
      << "mode " << to_string(g.mode()) << "\n"
      << "vertices " << g.vertex_count() << "\n"
      << "s " << inst.s << "\nt " << inst.t << "\np " << inst.p << "\nk " << inst.k << "\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (const auto& c = g.coord(v)) out << "coord " << v << " " << c->x << " " << c->y << "\n";
  for (const auto& e : g.edges()) {
    if (e.length == 1 && !e.has_polyline()) {
      out << "edge " << e.tail << " " << e.head << "\n";
      continue;
    }
    out << "chain " << e.tail << " " << e.head << " " << e.length;
    if (e.has_polyline()) {
      if (style == PolylineStyle::corners) {
        out << " corners";
        for (const auto& pt : e.corners) out << " " << pt.x << " " << pt.y;
      } else {
        for (const auto& pt : expand_corners(e.corners)) out << " " << pt.x << " " << pt.y;
      }
    }
    out << "\n";
  }
  return out.str();
}

/// Parses `msesol 1`, `paths <p>`, then p lines `path <edgeId>[+|-] ...`.
inline Solution parse_solution(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"msesol", "1"})
    throw parse_error(lines.empty() ? 0 : lines[0].number, "expected header 'msesol 1'");
  if (lines.size() < 2 || lines[1].tokens[0] != "paths")
    throw parse_error(lines.size() < 2 ? lines[0].number : lines[1].number, "expected 'paths <count>'");
  detail::expect_arity(lines[1], 2);
  const auto count = detail::to_int(lines[1], 1);
  if (count < 0) throw parse_error(lines[1].number, "negative path count");
  Solution sol;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens[0] != "path") throw parse_error(l.number, "expected 'path'");
    PathSeq path;
    for (std::size_t j = 1; j < l.tokens.size(); ++j) {
      std::string tok = l.tokens[j];
      bool reverse = false;
      if (!tok.empty() && (tok.back() == '+' || tok.back() == '-')) {
        reverse = tok.back() == '-';
        tok.pop_back();
      }
      std::uint64_t id = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
      if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size() || id > UINT32_MAX)
        throw parse_error(l.number, "bad step '" + l.tokens[j] + "'");
      path.steps.push_back({static_cast<EdgeId>(id), reverse});
    }
    sol.paths.push_back(std::move(path));
  }
  if (static_cast<std::int64_t>(sol.paths.size()) != count)
    throw parse_error(lines.back().number, "declared " + std::to_string(count) + " paths, found " +
                                               std::to_string(sol.paths.size()));
  return sol;
}

inline std::string write_solution(const Solution& sol) {
  std::ostringstream out;
  out << "msesol 1\npaths " << sol.paths.size() << "\n";
  for (const auto& path : sol.paths) {
    out << "path";
    for (const auto& st : path.steps) out << " " << st.edge << (st.reverse ? '-' : '+');
    out << "\n";
  }
  return out.str();
}

inline Instance load_instance(const std::string& path) { return parse_instance(detail::read_file(path)); }
inline Solution load_solution(const std::string& path) { return parse_solution(detail::read_file(path)); }

}  // namespace mse
