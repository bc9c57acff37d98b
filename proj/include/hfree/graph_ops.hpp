#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

/// Connected components, each sorted, ordered by smallest member.
inline std::vector<VertexSubset> components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<VertexSubset> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSubset comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    normalize(comp);
    out.push_back(std::move(comp));
  }
  return out;
}

/// The empty graph counts as disconnected.
inline bool is_connected(const Graph& g) {
  return g.vertex_count() > 0 && components(g).size() == 1;
}

/// True iff g[vertices] is connected (false for the empty set).
inline bool induces_connected(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) return false;
  return is_connected(g.induced(vertices));
}

inline bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() + 1 == g.vertex_count();
}

inline std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

namespace detail {

// Extends the induced path `path` (with membership bitmap `on_path`) and
// records the longest edge count seen.
inline void extend_induced_path(const Graph& g, std::vector<Vertex>& path,
                                std::vector<bool>& on_path, std::size_t& best) {
  best = std::max(best, path.size() - 1);
  if (best + 1 == g.vertex_count()) return;
  const Vertex tail = path.back();
  for (Vertex w : g.neighbors(tail)) {
    if (on_path[w]) continue;
    bool chordless = true;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (g.has_edge(path[i], w)) {
        chordless = false;
        break;
      }
    }
    if (!chordless) continue;
    path.push_back(w);
    on_path[w] = true;
    extend_induced_path(g, path, on_path, best);
    on_path[w] = false;
    path.pop_back();
  }
}

}  // namespace detail

/// Number of edges of the longest induced path. Exponential in the worst
/// case; meant for small fixed patterns.
inline std::size_t induced_diameter(const Graph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("induced_diameter of the empty graph");
  std::size_t best = 0;
  std::vector<Vertex> path;
  std::vector<bool> on_path(g.vertex_count(), false);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    path.assign(1, s);
    on_path[s] = true;
    detail::extend_induced_path(g, path, on_path, best);
    on_path[s] = false;
    if (best + 1 == g.vertex_count()) break;
  }
  return best;
}

inline Graph complement(const Graph& g) {
  Graph out(g.vertex_count());
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
      if (!g.has_edge(a, b)) out.add_edge(a, b);
    }
  }
  return out;
}

/// Later graphs have their ids shifted past the earlier ones.
inline Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t n = 0;
  for (const Graph& p : parts) n += p.vertex_count();
  Graph out(n);
  std::size_t offset = 0;
  for (const Graph& p : parts) {
    for (const Edge& e : p.edges()) out.add_edge(e.u + offset, e.v + offset);
    offset += p.vertex_count();
  }
  return out;
}

inline Graph disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

/// t disjoint copies of g.
inline Graph copies(const Graph& g, std::size_t t) {
  std::vector<Graph> parts(t, g);
  return disjoint_union(parts);
}

/// Removes the given edges (which must be present) from a copy of g.
inline Graph without_edges(const Graph& g, std::span<const Edge> edges) {
  Graph out = g;
  for (const Edge& e : edges) {
    if (!out.remove_edge(e.u, e.v)) throw std::invalid_argument("edge not in graph");
  }
  return out;
}

}  // namespace hfree
