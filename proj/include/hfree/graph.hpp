#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hfree {

using Vertex = std::size_t;

/// Unordered vertex pair, stored normalized with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of edges.
using EdgeSet = std::vector<Edge>;
/// Sorted, duplicate-free list of vertex ids.
using VertexSubset = std::vector<Vertex>;

inline void normalize(EdgeSet& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

inline void normalize(VertexSubset& vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
}

/// Simple undirected graph on vertices 0..n-1.
///
/// The vertex count is fixed at construction. Adjacency is kept twice: as
/// sorted neighbor lists for iteration and as a bit matrix for O(1) lookups,
/// since the subgraph search is dominated by adjacency queries.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t vertex_count)
      : n_(vertex_count),
        stride_((vertex_count + 63) / 64),
        adj_(vertex_count),
        matrix_(vertex_count * stride_, 0) {}

  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    Graph g(vertex_count);
    for (const Edge& e : edges) {
      if (!g.add_edge(e.u, e.v)) {
        throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + "-" +
                                    std::to_string(e.v));
      }
    }
    return g;
  }

  static Graph from_edges(std::size_t vertex_count,
                          std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    std::vector<Edge> list;
    for (auto [a, b] : edges) list.emplace_back(a, b);
    return from_edges(vertex_count, std::span<const Edge>(list));
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }

  bool has_edge(Vertex a, Vertex b) const noexcept {
    if (a >= n_ || b >= n_) return false;
    return (matrix_[a * stride_ + b / 64] >> (b % 64)) & 1U;
  }

  /// Inserts {a,b}; returns false if it was already present.
  bool add_edge(Vertex a, Vertex b) {
    check_pair(a, b);
    if (has_edge(a, b)) return false;
    set_bit(a, b, true);
    set_bit(b, a, true);
    insert_sorted(adj_[a], b);
    insert_sorted(adj_[b], a);
    ++m_;
    return true;
  }

  /// Removes {a,b}; returns false if it was absent.
  bool remove_edge(Vertex a, Vertex b) {
    check_pair(a, b);
    if (!has_edge(a, b)) return false;
    set_bit(a, b, false);
    set_bit(b, a, false);
    erase_sorted(adj_[a], b);
    erase_sorted(adj_[b], a);
    --m_;
    return true;
  }

  EdgeSet edges() const {
    EdgeSet out;
    out.reserve(m_);
    for (Vertex a = 0; a < n_; ++a) {
      for (Vertex b : adj_[a]) {
        if (a < b) out.emplace_back(a, b);
      }
    }
    return out;
  }

  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const {
    Graph g(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        if (has_edge(vertices[i], vertices[j])) g.add_edge(i, j);
      }
    }
    return g;
  }

  std::size_t min_degree() const {
    std::size_t d = n_ == 0 ? 0 : adj_[0].size();
    for (const auto& row : adj_) d = std::min(d, row.size());
    return d;
  }

  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& row : adj_) d = std::max(d, row.size());
    return d;
  }

  /// Labeled equality: same vertex count and same edge set.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.adj_ == b.adj_;
  }

 private:
  void check_pair(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_) {
      throw std::out_of_range("vertex id out of range");
    }
    if (a == b) throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
  }

  void set_bit(Vertex a, Vertex b, bool on) {
    std::uint64_t& word = matrix_[a * stride_ + b / 64];
    const std::uint64_t mask = std::uint64_t{1} << (b % 64);
    word = on ? (word | mask) : (word & ~mask);
  }

  static void insert_sorted(std::vector<Vertex>& row, Vertex x) {
    row.insert(std::lower_bound(row.begin(), row.end(), x), x);
  }

  static void erase_sorted(std::vector<Vertex>& row, Vertex x) {
    row.erase(std::lower_bound(row.begin(), row.end(), x));
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> matrix_;
};

}  // namespace hfree
