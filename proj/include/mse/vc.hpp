#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mse/graph.hpp"
#include "mse/io.hpp"

namespace mse {

/// Vertex Cover instance: undirected simple graph with unit edges, budget k.
struct VCInstance {
  Graph graph{Mode::undirected, 0};
  std::int64_t k = 0;

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (VertexId v = 0; v < graph.vertex_count(); ++v) d = std::max(d, graph.degree(v));
    return d;
  }
  friend bool operator==(const VCInstance&, const VCInstance&) = default;
};

struct CoverResult {
  bool exists = false;
  std::optional<std::vector<VertexId>> cover;
};

inline bool is_vertex_cover(const Graph& g, const std::vector<VertexId>& cover) {
  std::vector<char> in(g.vertex_count(), 0);
  for (VertexId v : cover) in.at(v) = 1;
  for (const auto& e : g.edges())
    if (!in[e.tail] && !in[e.head]) return false;
  return true;
}

/// Exact search: branch on the endpoints of the first uncovered edge.
inline CoverResult vc_decide(const VCInstance& vc, std::size_t max_vertices = 24) {
  const Graph& g = vc.graph;
  if (g.vertex_count() > max_vertices)
    throw limit_error("vertex cover search is limited to " + std::to_string(max_vertices) + " vertices");
  std::vector<char> in(g.vertex_count(), 0);
  auto rec = [&](auto&& self, std::int64_t budget) -> bool {
    const SuperEdge* open = nullptr;
    for (const auto& e : g.edges())
      if (!in[e.tail] && !in[e.head]) {
        open = &e;
        break;
      }
    if (!open) return true;
    if (budget == 0) return false;
    for (VertexId v : {open->tail, open->head}) {
      in[v] = 1;
      if (self(self, budget - 1)) return true;
      in[v] = 0;
    }
    return false;
  };
  CoverResult out;
  if (vc.k >= 0 && rec(rec, vc.k)) {
    out.exists = true;
    std::vector<VertexId> cover;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      if (in[v]) cover.push_back(v);
    out.cover = std::move(cover);
  }
  return out;
}

/// Adds isolated vertices until the vertex count is a power of two.
inline VCInstance pad_to_power_of_two(VCInstance vc) {
  std::size_t n = vc.graph.vertex_count(), target = 1;
  while (target < n) target <<= 1;
  if (target < 2) target = 2;
  for (; n < target; ++n) vc.graph.add_vertex();
  return vc;
}

inline bool is_power_of_two(std::size_t n) { return n >= 1 && (n & (n - 1)) == 0; }

/// Random simple graph with n vertices, m edges and maximum degree three.
/// Deterministic for a fixed seed.
inline VCInstance gen_vc_deg3(std::uint64_t seed, std::size_t n, std::size_t m, std::int64_t k = 0) {
  if (2 * m > 3 * n) throw precondition_error("m exceeds 3n/2; no graph of maximum degree three exists");
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) pairs.push_back({a, b});
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::vector<int> deg(n, 0);
    std::vector<std::pair<VertexId, VertexId>> chosen;
    for (auto [a, b] : pairs) {
      if (chosen.size() == m) break;
      if (deg[a] >= 3 || deg[b] >= 3) continue;
      ++deg[a];
      ++deg[b];
      chosen.push_back({a, b});
    }
    if (chosen.size() != m) continue;
    std::sort(chosen.begin(), chosen.end());
    VCInstance vc;
    vc.graph = Graph(Mode::undirected, n);
    for (auto [a, b] : chosen) vc.graph.add_edge(a, b);
    vc.k = k;
    return vc;
  }
  throw error("could not generate a degree-three graph with these parameters");
}

/// `vc 1`, `vertices <n>`, `k <int>`, then `edge <u> <v>` lines.
inline VCInstance parse_vc(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty() || lines[0].tokens != std::vector<std::string>{"vc", "1"})
    throw parse_error(lines.empty() ? 0 : lines[0].number, "expected header 'vc 1'");
  VCInstance vc;
  std::optional<std::int64_t> n, k;
  std::set<std::pair<VertexId, VertexId>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens[0] == "vertices") {
      detail::expect_arity(l, 2);
      if (n) throw parse_error(l.number, "duplicate 'vertices'");
      n = detail::to_int(l, 1);
      if (*n < 1) throw parse_error(l.number, "need at least one vertex");
      vc.graph = Graph(Mode::undirected, static_cast<std::size_t>(*n));
    } else if (l.tokens[0] == "k") {
      detail::expect_arity(l, 2);
      if (k) throw parse_error(l.number, "duplicate 'k'");
      k = detail::to_int(l, 1);
      if (*k < 0) throw parse_error(l.number, "k must be non-negative");
    } else if (l.tokens[0] == "edge") {
      if (!n) throw parse_error(l.number, "'vertices' must precede 'edge'");
      detail::expect_arity(l, 3);
      const VertexId u = detail::to_vertex(l, 1, vc.graph.vertex_count());
      const VertexId v = detail::to_vertex(l, 2, vc.graph.vertex_count());
      if (u == v) throw parse_error(l.number, "self-loop on vertex " + std::to_string(u));
      if (!seen.insert(std::minmax(u, v)).second) throw parse_error(l.number, "duplicate edge");
      vc.graph.add_edge(u, v);
    } else {
      throw parse_error(l.number, "unknown keyword '" + l.tokens[0] + "'");
    }
  }
  if (!n || !k) throw parse_error(lines.back().number, "missing 'vertices' or 'k'");
  vc.k = *k;
  return vc;
}

inline std::string write_vc(const VCInstance& vc) {
  std::ostringstream out;
  out << "vc 1\nvertices " << vc.graph.vertex_count() << "\nk " << vc.k << "\n";
  for (const auto& e : vc.graph.edges()) out << "edge " << e.tail << " " << e.head << "\n";
  return out.str();
}

inline VCInstance load_vc(const std::string& path) { return parse_vc(detail::read_file(path)); }

}  // namespace mse
