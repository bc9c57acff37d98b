#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hfree/canonical.hpp"
#include "hfree/graph.hpp"
#include "hfree/graph_ops.hpp"

namespace hfree {

// ---------------------------------------------------------------------------
// Classification result
// ---------------------------------------------------------------------------

/// At most one edge: solvable in polynomial time, no hardness chain.
struct PolynomialTime {};
/// S_l, l >= 2.
struct Star {
  std::size_t leaves = 0;
};
/// S_{l1,l2}, 1 <= l1 <= l2.
struct TwinStar {
  std::size_t l1 = 0;
  std::size_t l2 = 0;
};
/// Tree of induced diameter >= 4.
struct GeneralTree {
  std::size_t diameter = 0;
};
/// C_l, l >= 3 (includes K3).
struct Cycle {
  std::size_t length = 0;
};
/// Connected r-regular, r >= 3.
struct RegularHigh {
  std::size_t degree = 0;
};
/// tK2 + t'K1 with t >= 2.
struct MatchingUnion {
  std::size_t edges = 0;
  std::size_t isolated = 0;
};

using ConnectedKind = std::variant<Star, TwinStar, GeneralTree, Cycle, RegularHigh>;

/// Disconnected pattern whose chosen largest component is a tree or regular.
struct CompositeLargest {
  ConnectedKind inner;
  Graph component;
  std::size_t copies = 0;
  std::vector<Graph> leftover;
};

struct Unsupported {
  std::string reason;
};

using PatternKind = std::variant<PolynomialTime, Star, TwinStar, GeneralTree, Cycle, RegularHigh,
                                 MatchingUnion, CompositeLargest, Unsupported>;

struct ClassificationResult {
  PatternKind kind;
  std::optional<VertexSubset> witness;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(kind);
  }
  bool supported() const { return !is<PolynomialTime>() && !is<Unsupported>(); }
};

enum class CarvingShape { p3, k3, other_connected };

/// Connected vertex set whose removal leaves a nonempty connected graph.
struct CarvingSet {
  VertexSubset vertices;
  CarvingShape shape = CarvingShape::other_connected;
};

struct LargestComponent {
  Graph component;
  std::size_t index = 0;       // position in components(h)
  std::size_t copies = 0;      // components isomorphic to `component`
  std::vector<Graph> leftover; // all remaining components, in order
  VertexSubset lifted;         // vertices of all copies
  bool ambiguous = false;      // several pairwise non-isomorphic largest components
};

// ---------------------------------------------------------------------------
// Recognizers
// ---------------------------------------------------------------------------

inline std::optional<std::size_t> recognize_star(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3 || !is_tree(g)) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return n - 1;
  }
  return std::nullopt;
}

/// (l1, l2) normalized with l1 <= l2.
inline std::optional<std::pair<std::size_t, std::size_t>> recognize_twin_star(const Graph& g) {
  if (g.vertex_count() < 4 || !is_tree(g)) return std::nullopt;
  std::vector<Vertex> internal;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) >= 2) internal.push_back(v);
  }
  if (internal.size() != 2 || !g.has_edge(internal[0], internal[1])) return std::nullopt;
  std::size_t a = g.degree(internal[0]) - 1;
  std::size_t b = g.degree(internal[1]) - 1;
  if (a > b) std::swap(a, b);
  return std::make_pair(a, b);
}

/// The induced subgraph on non-leaf vertices; diameter drops by exactly 2.
inline Graph strip_leaves(const Graph& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("strip_leaves: input is not a tree");
  if (induced_diameter(tree) <= 3) {
    throw std::invalid_argument("strip_leaves: tree diameter must exceed 3");
  }
  VertexSubset keep;
  for (Vertex v = 0; v < tree.vertex_count(); ++v) {
    if (tree.degree(v) >= 2) keep.push_back(v);
  }
  return tree.induced(keep);
}

namespace detail {

inline bool next_combination(std::vector<Vertex>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline CarvingShape shape_of(const Graph& g, const VertexSubset& s) {
  if (s.size() != 3) return CarvingShape::other_connected;
  std::size_t m = g.induced(s).edge_count();
  return m == 3 ? CarvingShape::k3 : (m == 2 ? CarvingShape::p3 : CarvingShape::other_connected);
}

inline bool is_carving(const Graph& h, const VertexSubset& s) {
  if (s.size() >= h.vertex_count() || !induces_connected(h, s)) return false;
  VertexSubset rest;
  std::size_t j = 0;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (j < s.size() && s[j] == v) {
      ++j;
    } else {
      rest.push_back(v);
    }
  }
  return induces_connected(h, rest);
}

}  // namespace detail

/// All carving sets of size d in lexicographic order.
inline std::vector<CarvingSet> carving_sets(const Graph& h, std::size_t d) {
  if (!is_connected(h)) throw std::invalid_argument("carving sets need a connected graph");
  std::vector<CarvingSet> out;
  if (d == 0 || d >= h.vertex_count()) return out;
  std::vector<Vertex> comb(d);
  for (std::size_t i = 0; i < d; ++i) comb[i] = i;
  do {
    if (detail::is_carving(h, comb)) out.push_back({comb, detail::shape_of(h, comb)});
  } while (detail::next_combination(comb, h.vertex_count()));
  return out;
}

/// Lexicographically least carving set of size d, if one exists.
inline std::optional<CarvingSet> find_carving_set(const Graph& h, std::size_t d) {
  if (!is_connected(h)) throw std::invalid_argument("find_carving_set needs a connected graph");
  if (d == 0 || d >= h.vertex_count()) return std::nullopt;
  std::vector<Vertex> comb(d);
  for (std::size_t i = 0; i < d; ++i) comb[i] = i;
  do {
    if (detail::is_carving(h, comb)) return CarvingSet{comb, detail::shape_of(h, comb)};
  } while (detail::next_combination(comb, h.vertex_count()));
  return std::nullopt;
}

/// Size-3 carving set for a regular pattern, preferring an induced P3.
inline std::optional<CarvingSet> choose_regular_carving(const Graph& r) {
  auto all = carving_sets(r, 3);
  for (const auto& c : all) {
    if (c.shape == CarvingShape::p3) return c;
  }
  for (const auto& c : all) {
    if (c.shape == CarvingShape::k3) return c;
  }
  return std::nullopt;
}

inline bool is_tree_or_regular(const Graph& g) { return is_tree(g) || regular_degree(g).has_value(); }

/// Picks a largest component, preferring trees and regular graphs, then the
/// smallest canonical form, then the earliest component.
inline LargestComponent choose_largest_component(const Graph& h) {
  if (h.vertex_count() == 0) throw std::invalid_argument("choose_largest_component of the empty graph");
  const auto comps = components(h);
  std::size_t largest = 0;
  for (const auto& c : comps) largest = std::max(largest, c.size());

  std::vector<std::size_t> candidates, qualifying;
  std::vector<Graph> induced(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    induced[i] = h.induced(comps[i]);
    if (comps[i].size() != largest) continue;
    candidates.push_back(i);
    if (is_tree_or_regular(induced[i])) qualifying.push_back(i);
  }
  const auto& pool = qualifying.empty() ? candidates : qualifying;
  std::size_t chosen = pool.front();
  CanonicalForm chosen_form = canonical_form(induced[chosen]);
  for (std::size_t i : pool) {
    CanonicalForm f = canonical_form(induced[i]);
    if (f < chosen_form) {
      chosen = i;
      chosen_form = std::move(f);
    }
  }

  LargestComponent out;
  out.component = induced[chosen];
  out.index = chosen;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const bool same = comps[i].size() == largest && canonical_form(induced[i]) == chosen_form;
    if (same) {
      ++out.copies;
      out.lifted.insert(out.lifted.end(), comps[i].begin(), comps[i].end());
    } else {
      out.leftover.push_back(induced[i]);
      if (comps[i].size() == largest) out.ambiguous = true;
    }
  }
  normalize(out.lifted);
  return out;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

namespace detail {

inline std::optional<ConnectedKind> classify_connected(const Graph& h) {
  if (auto r = regular_degree(h)) {
    if (*r == 2) return Cycle{h.vertex_count()};
    if (*r >= 3) return RegularHigh{*r};
  }
  if (is_tree(h) && h.edge_count() >= 2) {
    const std::size_t diameter = induced_diameter(h);
    if (diameter == 2) return Star{h.vertex_count() - 1};
    if (diameter == 3) {
      auto [a, b] = *recognize_twin_star(h);
      return TwinStar{a, b};
    }
    return GeneralTree{diameter};
  }
  return std::nullopt;
}

inline PatternKind widen(const ConnectedKind& k) {
  return std::visit([](const auto& v) -> PatternKind { return v; }, k);
}

}  // namespace detail

inline ClassificationResult classify(const Graph& h) {
  if (h.vertex_count() == 0) throw std::invalid_argument("classify needs at least one vertex");
  if (h.edge_count() <= 1) return {PolynomialTime{}, std::nullopt};

  const auto comps = components(h);
  bool small_components = true;
  std::size_t k2 = 0, k1 = 0;
  VertexSubset matched;
  for (const auto& c : comps) {
    if (c.size() == 1) {
      ++k1;
    } else if (c.size() == 2) {
      ++k2;
      matched.insert(matched.end(), c.begin(), c.end());
    } else {
      small_components = false;
    }
  }
  if (small_components) {
    normalize(matched);
    return {MatchingUnion{k2, k1}, k1 > 0 ? std::optional(matched) : std::nullopt};
  }

  if (comps.size() == 1) {
    auto kind = detail::classify_connected(h);
    if (!kind) return {Unsupported{"connected, neither a tree nor regular"}, std::nullopt};
    std::optional<VertexSubset> witness;
    if (std::holds_alternative<RegularHigh>(*kind)) {
      auto carving = choose_regular_carving(h);
      if (!carving) throw std::logic_error("regular graph without a size-3 carving set");
      witness = carving->vertices;
    }
    return {detail::widen(*kind), witness};
  }

  auto largest = choose_largest_component(h);
  if (!is_tree_or_regular(largest.component)) {
    return {Unsupported{"no largest component is a tree or regular"}, std::nullopt};
  }
  auto inner = detail::classify_connected(largest.component);
  if (!inner) return {Unsupported{"largest component is not classifiable"}, std::nullopt};
  return {CompositeLargest{*inner, largest.component, largest.copies, largest.leftover},
          largest.lifted};
}

// ---------------------------------------------------------------------------
// Text form: class=<kind> params=<...> witness=<1-based list or ->
// ---------------------------------------------------------------------------

namespace detail {

struct KindText {
  std::string name;
  std::string params;
};

inline KindText kind_text(const PatternKind& kind) {
  auto num = [](std::size_t x) { return std::to_string(x); };
  return std::visit(
      [&](const auto& k) -> KindText {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, PolynomialTime>) return {"PolynomialTime", "-"};
        if constexpr (std::is_same_v<T, Star>) return {"Star", num(k.leaves)};
        if constexpr (std::is_same_v<T, TwinStar>) return {"TwinStar", num(k.l1) + "," + num(k.l2)};
        if constexpr (std::is_same_v<T, GeneralTree>) return {"GeneralTree", num(k.diameter)};
        if constexpr (std::is_same_v<T, Cycle>) return {"Cycle", num(k.length)};
        if constexpr (std::is_same_v<T, RegularHigh>) return {"RegularHigh", num(k.degree)};
        if constexpr (std::is_same_v<T, MatchingUnion>) {
          return {"MatchingUnion", num(k.edges) + "," + num(k.isolated)};
        }
        if constexpr (std::is_same_v<T, CompositeLargest>) {
          KindText inner = kind_text(widen(k.inner));
          return {"CompositeLargest", inner.name + "(" + inner.params + "),t=" + num(k.copies) +
                                          ",leftover=" + num(k.leftover.size())};
        }
        if constexpr (std::is_same_v<T, Unsupported>) return {"Unsupported", "-"};
      },
      kind);
}

}  // namespace detail

inline std::string kind_name(const PatternKind& kind) { return detail::kind_text(kind).name; }

inline std::string format_vertex_list(const VertexSubset& vs) {
  if (vs.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i] + 1);
  }
  return out;
}

inline std::string format_classification(const ClassificationResult& result) {
  auto text = detail::kind_text(result.kind);
  return "class=" + text.name + " params=" + text.params +
         " witness=" + (result.witness ? format_vertex_list(*result.witness) : std::string("-"));
}

}  // namespace hfree
