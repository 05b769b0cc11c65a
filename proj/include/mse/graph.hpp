#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "mse/error.hpp"

namespace mse {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

enum class Mode { undirected, directed };

inline const char* to_string(Mode m) { return m == Mode::directed ? "directed" : "undirected"; }

/// Integer lattice point.
struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  auto operator<=>(const Point&) const = default;
};

inline std::int64_t l1(Point a, Point b) { return std::llabs(a.x - b.x) + std::llabs(a.y - b.y); }

/// Drops repeated points and collinear interior points of an axis-aligned polyline,
/// keeping only the endpoints and the turning points.
inline std::vector<Point> normalize_corners(const std::vector<Point>& pts) {
  std::vector<Point> out;
  for (const Point& p : pts) {
    if (!out.empty() && out.back() == p) continue;
    if (out.size() >= 2) {
      const Point& a = out[out.size() - 2];
      const Point& b = out.back();
      const bool same_x = a.x == b.x && b.x == p.x;
      const bool same_y = a.y == b.y && b.y == p.y;
      // Only drop b when the walk keeps its direction through it.
      if ((same_x && (b.y - a.y) * (p.y - b.y) > 0) || (same_y && (b.x - a.x) * (p.x - b.x) > 0)) {
        out.back() = p;
        continue;
      }
    }
    out.push_back(p);
  }
  return out;
}

/// Sum of segment lengths; nullopt if some segment is not axis-aligned.
inline std::optional<std::int64_t> polyline_length(const std::vector<Point>& corners) {
  std::int64_t len = 0;
  for (std::size_t i = 1; i < corners.size(); ++i) {
    const Point a = corners[i - 1], b = corners[i];
    if (a.x != b.x && a.y != b.y) return std::nullopt;
    len += l1(a, b);
  }
  return len;
}

/// Every lattice point visited by an axis-aligned polyline, endpoints included.
inline std::vector<Point> expand_corners(const std::vector<Point>& corners) {
  std::vector<Point> out;
  if (corners.empty()) return out;
  out.push_back(corners.front());
  for (std::size_t i = 1; i < corners.size(); ++i) {
    Point cur = corners[i - 1];
    const Point to = corners[i];
    const std::int64_t dx = (to.x > cur.x) - (to.x < cur.x);
    const std::int64_t dy = (to.y > cur.y) - (to.y < cur.y);
    while (cur != to) {
      cur.x += dx;
      cur.y += dy;
      out.push_back(cur);
    }
  }
  return out;
}

/// A chain of `length` unit edges between two declared vertices. Interior chain
/// vertices are implicit; `corners` (optional) embeds the chain in the lattice.
struct SuperEdge {
  VertexId tail = 0;
  VertexId head = 0;
  std::int64_t length = 1;
  std::vector<Point> corners;

  bool has_polyline() const { return !corners.empty(); }
};

/// One entry of a vertex's incidence list. `forward` means the edge is
/// traversed tail -> head when leaving the vertex.
struct Incidence {
  EdgeId edge;
  VertexId other;
  bool forward;
};

/// Multigraph of super-edges. Edge ids are dense and stable; incidence lists are
/// kept in ascending edge-id order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Mode mode, std::size_t vertex_count = 0)
      : mode_(mode), coords_(vertex_count), adj_(vertex_count) {}

  Mode mode() const { return mode_; }
  bool directed() const { return mode_ == Mode::directed; }
  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  VertexId add_vertex(std::optional<Point> coord = std::nullopt) {
    coords_.push_back(coord);
    adj_.emplace_back();
    return static_cast<VertexId>(adj_.size() - 1);
  }

  EdgeId add_edge(VertexId tail, VertexId head, std::int64_t length = 1,
                  std::vector<Point> corners = {}) {
    if (tail >= vertex_count() || head >= vertex_count())
      throw precondition_error("edge references unknown vertex");
    if (tail == head) throw precondition_error("self-loops are not allowed");
    if (length < 1) throw precondition_error("chain length must be positive");
    const auto id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(SuperEdge{tail, head, length, normalize_corners(corners)});
    adj_[tail].push_back({id, head, true});
    adj_[head].push_back({id, tail, false});
    total_length_ += length;
    return id;
  }

  void set_coord(VertexId v, Point p) { coords_.at(v) = p; }
  const std::optional<Point>& coord(VertexId v) const { return coords_.at(v); }
  bool has_all_coords() const {
    for (const auto& c : coords_)
      if (!c) return false;
    return true;
  }

  const SuperEdge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<SuperEdge>& edges() const { return edges_; }
  const std::vector<Incidence>& incident(VertexId v) const { return adj_.at(v); }
  std::size_t degree(VertexId v) const { return adj_.at(v).size(); }

  /// Whether `inc` may be used to leave its vertex (always true when undirected).
  bool traversable(const Incidence& inc) const { return !directed() || inc.forward; }

  /// Number of unit edges after expanding every chain.
  std::int64_t total_length() const { return total_length_; }

  std::int64_t length(EdgeId e) const { return edges_.at(e).length; }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.mode_ != b.mode_ || a.coords_ != b.coords_ || a.edges_.size() != b.edges_.size())
      return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
      const auto &x = a.edges_[i], &y = b.edges_[i];
      if (x.tail != y.tail || x.head != y.head || x.length != y.length || x.corners != y.corners)
        return false;
    }
    return true;
  }

 private:
  Mode mode_ = Mode::undirected;
  std::vector<std::optional<Point>> coords_;
  std::vector<SuperEdge> edges_;
  std::vector<std::vector<Incidence>> adj_;
  std::int64_t total_length_ = 0;
};

/// An MSE / DMSE instance: route `p` s-t paths sharing at most `k` unit edges.
struct Instance {
  Graph graph;
  VertexId s = 0;
  VertexId t = 1;
  std::int64_t p = 1;
  std::int64_t k = 0;

  void validate() const {
    if (s >= graph.vertex_count() || t >= graph.vertex_count())
      throw precondition_error("s or t is not a vertex");
    if (s == t) throw precondition_error("s and t must differ");
    if (p < 1) throw precondition_error("p must be positive");
    if (k < 0) throw precondition_error("k must be non-negative");
  }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// A single traversal of a super-edge; `reverse` walks head -> tail.
struct Step {
  EdgeId edge = 0;
  bool reverse = false;
  friend bool operator==(const Step&, const Step&) = default;
};

struct PathSeq {
  std::vector<Step> steps;
  friend bool operator==(const PathSeq&, const PathSeq&) = default;
};

struct Solution {
  std::vector<PathSeq> paths;
  friend bool operator==(const Solution&, const Solution&) = default;
};

inline VertexId step_from(const Graph& g, const Step& st) {
  const auto& e = g.edge(st.edge);
  return st.reverse ? e.head : e.tail;
}

inline VertexId step_to(const Graph& g, const Step& st) {
  const auto& e = g.edge(st.edge);
  return st.reverse ? e.tail : e.head;
}

/// Turns a vertex walk plus the edge used at every hop into a PathSeq.
inline PathSeq make_path(const Graph& g, VertexId start, const std::vector<EdgeId>& edges) {
  PathSeq path;
  VertexId at = start;
  for (EdgeId e : edges) {
    const auto& se = g.edge(e);
    if (se.tail == at) {
      path.steps.push_back({e, false});
      at = se.head;
    } else if (se.head == at) {
      path.steps.push_back({e, true});
      at = se.tail;
    } else {
      throw precondition_error("edge " + std::to_string(e) + " does not continue the walk");
    }
  }
  return path;
}

}  // namespace mse
