#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "hfree/canonical.hpp"
#include "hfree/graph.hpp"

namespace hfree {

/// One representative per isomorphism class of graphs on exactly n
/// vertices, in canonical-form order. Built by adding a vertex with every
/// possible neighborhood to each class on n-1 vertices and deduplicating by
/// canonical form.
inline std::vector<Graph> nonisomorphic_graphs(std::size_t n) {
  std::vector<Graph> level;
  if (n == 0) {
    level.emplace_back(0);
    return level;
  }
  level.emplace_back(1);
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<CanonicalForm, Graph> classes;
    for (const Graph& base : level) {
      const std::size_t prev = base.vertex_count();
      const EdgeSet base_edges = base.edges();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << prev); ++mask) {
        Graph g(size);
        for (const Edge& e : base_edges) g.add_edge(e.u, e.v);
        for (Vertex v = 0; v < prev; ++v) {
          if ((mask >> v) & 1U) g.add_edge(v, prev);
        }
        auto labeling = canonical_labeling(g);
        if (!classes.contains(labeling.form)) {
          classes.emplace(std::move(labeling.form), g.induced(labeling.order));
        }
      }
    }
    level.clear();
    for (auto& [form, g] : classes) level.push_back(std::move(g));
  }
  return level;
}

/// All classes with min_n <= vertex count <= max_n, smallest first.
inline std::vector<Graph> nonisomorphic_graphs_up_to(std::size_t max_n, std::size_t min_n = 1) {
  std::vector<Graph> out;
  for (std::size_t n = min_n; n <= max_n; ++n) {
    auto level = nonisomorphic_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Uniform double in [0,1) from the raw engine output, so sequences do not
/// depend on the standard library's distribution implementations.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Index in [0, bound) from the raw engine output.
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
  return static_cast<std::size_t>(unit_uniform(rng) * static_cast<double>(bound));
}

/// G(n, p): each pair independently adjacent with probability p.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (unit_uniform(rng) < p) g.add_edge(a, b);
    }
  }
  return g;
}

}  // namespace hfree
