#pragma once

#include <stdexcept>

#include "hfree/graph.hpp"
#include "hfree/graph_ops.hpp"

namespace hfree::graphs {

inline Graph empty(std::size_t n) { return Graph(n); }

/// P_n: path on n vertices.
inline Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

/// C_n, n >= 3.
inline Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

inline Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

/// S_l: center 0 with l leaves.
inline Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

/// S_{l1,l2}: adjacent centers 0 and 1 carrying l1 and l2 leaves.
inline Graph twin_star(std::size_t l1, std::size_t l2) {
  Graph g(l1 + l2 + 2);
  g.add_edge(0, 1);
  Vertex next = 2;
  for (std::size_t i = 0; i < l1; ++i) g.add_edge(0, next++);
  for (std::size_t i = 0; i < l2; ++i) g.add_edge(1, next++);
  return g;
}

/// tK2.
inline Graph matching(std::size_t t) { return copies(complete(2), t); }

inline Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

/// Triangle 0-1-2 with pendant 3 attached to 0.
inline Graph paw() { return Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }

inline Graph diamond() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

/// Spider: center 0 with `legs` paths of `length` edges each.
inline Graph spider(std::size_t legs, std::size_t length) {
  Graph g(1 + legs * length);
  Vertex next = 1;
  for (std::size_t l = 0; l < legs; ++l) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < length; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

}  // namespace hfree::graphs
