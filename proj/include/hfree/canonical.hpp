#pragma once

// Canonical labeling by individualization-refinement.
//
// The search tree is built from an isomorphism-invariant equitable
// refinement; the canonical form is the maximal adjacency code over its
// leaves. Two prunings keep symmetric graphs cheap: orbit pruning at nodes
// of the leftmost path, and abandoning any subtree whose first leaf turns
// out to be automorphic to the leftmost leaf.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

/// Upper-triangle adjacency bits of the canonically relabeled graph,
/// row-major, packed most significant bit first.
struct CanonicalForm {
  std::size_t vertex_count = 0;
  std::vector<std::uint64_t> code;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[i] is the input vertex placed at canonical position i.
  std::vector<Vertex> order;
};

namespace detail {

using Partition = std::vector<std::vector<Vertex>>;

inline void refine(const Graph& g, Partition& cells) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> cell_of(n);
  while (true) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (Vertex v : cells[c]) cell_of[v] = c;
    }
    bool changed = false;
    Partition next;
    next.reserve(n);
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<std::size_t>, std::vector<Vertex>> groups;
      for (Vertex v : cell) {
        std::vector<std::size_t> signature(cells.size(), 0);
        for (Vertex w : g.neighbors(v)) ++signature[cell_of[w]];
        groups[std::move(signature)].push_back(v);
      }
      if (groups.size() > 1) changed = true;
      for (auto& [sig, members] : groups) next.push_back(std::move(members));
    }
    cells = std::move(next);
    if (!changed) return;
  }
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {}

  CanonicalLabeling run() {
    Partition root;
    if (n_ > 0) {
      root.emplace_back(n_);
      std::iota(root[0].begin(), root[0].end(), Vertex{0});
      refine(g_, root);
    }
    search(root, true);
    return {{n_, best_code_}, best_order_};
  }

 private:
  std::vector<std::uint64_t> code_of(const std::vector<Vertex>& order) const {
    const std::size_t bits = n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2;
    std::vector<std::uint64_t> code((bits + 63) / 64, 0);
    std::size_t t = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j, ++t) {
        if (g_.has_edge(order[i], order[j])) code[t / 64] |= std::uint64_t{1} << (63 - t % 64);
      }
    }
    return code;
  }

  Vertex find(std::vector<Vertex>& parent, Vertex x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  std::vector<Vertex> orbits() const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    for (const auto& gamma : automorphisms_) {
      for (Vertex v = 0; v < n_; ++v) {
        Vertex a = find(parent, v);
        Vertex b = find(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(parent, v);
    return parent;
  }

  // Returns true when the caller should abandon its subtree because an
  // automorphism onto the leftmost path was found below.
  bool search(const Partition& cells, bool leftmost) {
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) return leaf(cells, leftmost);

    const std::size_t index = static_cast<std::size_t>(target - cells.begin());
    const std::vector<Vertex> choices = *target;
    std::vector<Vertex> explored;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      const Vertex v = choices[i];
      if (leftmost && !explored.empty()) {
        auto orbit = orbits();
        bool equivalent = std::any_of(explored.begin(), explored.end(),
                                      [&](Vertex w) { return orbit[w] == orbit[v]; });
        if (equivalent) continue;
      }
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != index) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[c]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      refine(g_, child);
      explored.push_back(v);
      const bool abandon = search(child, leftmost && i == 0);
      if (abandon && !leftmost) return true;
    }
    return false;
  }

  bool leaf(const Partition& cells, bool leftmost) {
    std::vector<Vertex> order;
    order.reserve(n_);
    for (const auto& c : cells) order.push_back(c[0]);
    auto code = code_of(order);
    if (leftmost) {
      first_code_ = best_code_ = code;
      first_order_ = best_order_ = order;
      return false;
    }
    if (code == first_code_) {
      std::vector<Vertex> gamma(n_);
      for (std::size_t i = 0; i < n_; ++i) gamma[order[i]] = first_order_[i];
      automorphisms_.push_back(std::move(gamma));
      return true;
    }
    if (code > best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::uint64_t> first_code_, best_code_;
  std::vector<Vertex> first_order_, best_order_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

inline CanonicalLabeling canonical_labeling(const Graph& g) {
  return detail::CanonicalSearch(g).run();
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

/// g relabeled so that canonical position i becomes vertex i.
inline Graph canonical_graph(const Graph& g) {
  auto labeling = canonical_labeling(g);
  return g.induced(labeling.order);
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  auto degrees = [](const Graph& g) {
    std::vector<std::size_t> d(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace hfree
