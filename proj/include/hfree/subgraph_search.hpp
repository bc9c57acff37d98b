#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hfree/graph.hpp"
#include "hfree/graph_ops.hpp"

namespace hfree {

/// Thrown when a search or solver exceeds its configured work limit.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Work counter shared by the searches of one solve. Each candidate vertex
/// examined costs one unit; exceeding the limit throws CapacityError.
class SearchBudget {
 public:
  static constexpr std::uint64_t unlimited = std::numeric_limits<std::uint64_t>::max();

  explicit SearchBudget(std::uint64_t limit = unlimited) : limit_(limit) {}

  void charge(std::uint64_t amount = 1) {
    used_ += amount;
    if (used_ > limit_) {
      throw CapacityError("search work limit of " + std::to_string(limit_) + " exceeded");
    }
  }

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Pattern-to-host vertex map: pattern vertex p is sent to to_host[p].
struct IsoMap {
  std::vector<Vertex> to_host;

  Vertex operator[](Vertex pattern_vertex) const { return to_host.at(pattern_vertex); }

  std::optional<Vertex> to_pattern(Vertex host_vertex) const {
    auto it = std::find(to_host.begin(), to_host.end(), host_vertex);
    if (it == to_host.end()) return std::nullopt;
    return static_cast<Vertex>(it - to_host.begin());
  }

  friend auto operator<=>(const IsoMap&, const IsoMap&) = default;
};

enum class EmbeddingKind {
  induced,   // non-edges of the pattern must map to non-edges
  subgraph,  // only edges are constrained
};

/// A (not necessarily induced) copy of a pattern: vertex set, the image of
/// the pattern's edges, and one isomorphism onto it.
struct SubgraphCopy {
  VertexSubset vertices;
  EdgeSet edges;
  IsoMap map;
};

namespace detail {

/// Backtracking embedding search. Pattern vertices are matched in a
/// connectivity-first order so that each new vertex (except the first of a
/// component) is drawn from the host neighborhood of an already matched one.
class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern, EmbeddingKind kind, SearchBudget* budget)
      : host_(host), pattern_(pattern), kind_(kind), budget_(budget) {
    build_order();
    image_.assign(pattern.vertex_count(), 0);
    used_.assign(host.vertex_count(), 0);
  }

  /// Calls visit(image) for each embedding; visit returns false to stop.
  /// Returns false iff stopped early.
  template <class Visit>
  bool run(Visit& visit) {
    if (pattern_.vertex_count() > host_.vertex_count()) return true;
    return extend(0, visit);
  }

 private:
  static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

  void build_order() {
    const std::size_t p = pattern_.vertex_count();
    auto comps = components(pattern_);
    std::stable_sort(comps.begin(), comps.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<bool> placed(p, false);
    std::vector<std::size_t> placed_neighbors(p, 0);
    std::vector<std::size_t> position(p, none);
    for (const auto& comp : comps) {
      for (std::size_t step = 0; step < comp.size(); ++step) {
        Vertex best = comp.front();
        bool found = false;
        for (Vertex v : comp) {
          if (placed[v]) continue;
          if (!found) {
            best = v;
            found = true;
            continue;
          }
          auto key = [&](Vertex x) {
            return std::make_pair(placed_neighbors[x], pattern_.degree(x));
          };
          if (key(v) > key(best)) best = v;
        }
        placed[best] = true;
        position[best] = order_.size();
        order_.push_back(best);
        for (Vertex w : pattern_.neighbors(best)) ++placed_neighbors[w];
      }
    }
    anchor_.assign(p, none);
    for (std::size_t i = 0; i < p; ++i) {
      std::size_t earliest = none;
      for (Vertex w : pattern_.neighbors(order_[i])) {
        if (position[w] < i) earliest = std::min(earliest, position[w]);
      }
      anchor_[i] = earliest;
    }
  }

  bool consistent(std::size_t depth, Vertex candidate) const {
    const Vertex pv = order_[depth];
    if (used_[candidate]) return false;
    if (host_.degree(candidate) < pattern_.degree(pv)) return false;
    for (std::size_t j = 0; j < depth; ++j) {
      const Vertex pw = order_[j];
      const bool want = pattern_.has_edge(pv, pw);
      const bool have = host_.has_edge(candidate, image_[pw]);
      if (want && !have) return false;
      if (!want && have && kind_ == EmbeddingKind::induced) return false;
    }
    return true;
  }

  template <class Visit>
  bool try_candidate(std::size_t depth, Vertex candidate, Visit& visit) {
    if (budget_) budget_->charge();
    if (!consistent(depth, candidate)) return true;
    image_[order_[depth]] = candidate;
    used_[candidate] = 1;
    const bool keep_going = extend(depth + 1, visit);
    used_[candidate] = 0;
    return keep_going;
  }

  template <class Visit>
  bool extend(std::size_t depth, Visit& visit) {
    if (depth == order_.size()) {
      return visit(std::span<const Vertex>(image_));
    }
    if (anchor_[depth] != none) {
      const Vertex anchor_image = image_[order_[anchor_[depth]]];
      for (Vertex c : host_.neighbors(anchor_image)) {
        if (!try_candidate(depth, c, visit)) return false;
      }
    } else {
      for (Vertex c = 0; c < host_.vertex_count(); ++c) {
        if (!try_candidate(depth, c, visit)) return false;
      }
    }
    return true;
  }

  const Graph& host_;
  const Graph& pattern_;
  EmbeddingKind kind_;
  SearchBudget* budget_;
  std::vector<Vertex> order_;
  std::vector<std::size_t> anchor_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
};

}  // namespace detail

/// Visits every injective map of pattern vertices into the host satisfying
/// `kind`. `visit(std::span<const Vertex> image)` returns false to stop.
template <class Visit>
bool for_each_embedding(const Graph& host, const Graph& pattern, EmbeddingKind kind, Visit&& visit,
                        SearchBudget* budget = nullptr) {
  detail::Matcher matcher(host, pattern, kind, budget);
  return matcher.run(visit);
}

/// First induced embedding in search order, if any.
inline std::optional<IsoMap> find_induced_copy(const Graph& host, const Graph& pattern,
                                               SearchBudget* budget = nullptr) {
  std::optional<IsoMap> found;
  for_each_embedding(
      host, pattern, EmbeddingKind::induced,
      [&](std::span<const Vertex> image) {
        found = IsoMap{{image.begin(), image.end()}};
        return false;
      },
      budget);
  return found;
}

/// Vertex sets U with host[U] isomorphic to pattern, sorted lexicographically.
inline std::vector<VertexSubset> enumerate_induced_copies(const Graph& host, const Graph& pattern,
                                                          SearchBudget* budget = nullptr) {
  std::set<VertexSubset> found;
  for_each_embedding(
      host, pattern, EmbeddingKind::induced,
      [&](std::span<const Vertex> image) {
        VertexSubset u(image.begin(), image.end());
        normalize(u);
        found.insert(std::move(u));
        return true;
      },
      budget);
  return {found.begin(), found.end()};
}

/// All (vertex set, edge set) pairs of the host forming a copy of pattern,
/// sorted by (vertices, edges). Each carries the lexicographically least
/// isomorphism, comparing to_host sequences.
inline std::vector<SubgraphCopy> enumerate_subgraph_copies(const Graph& host, const Graph& pattern,
                                                           SearchBudget* budget = nullptr) {
  const EdgeSet pattern_edges = pattern.edges();
  std::map<std::pair<VertexSubset, EdgeSet>, IsoMap> found;
  for_each_embedding(
      host, pattern, EmbeddingKind::subgraph,
      [&](std::span<const Vertex> image) {
        VertexSubset u(image.begin(), image.end());
        normalize(u);
        EdgeSet es;
        es.reserve(pattern_edges.size());
        for (const Edge& e : pattern_edges) es.emplace_back(image[e.u], image[e.v]);
        normalize(es);
        IsoMap map{{image.begin(), image.end()}};
        auto [it, inserted] = found.try_emplace({std::move(u), std::move(es)}, map);
        if (!inserted && map < it->second) it->second = std::move(map);
        return true;
      },
      budget);
  std::vector<SubgraphCopy> out;
  out.reserve(found.size());
  for (auto& [key, map] : found) out.push_back({key.first, key.second, map});
  return out;
}

inline bool is_free(const Graph& host, const Graph& pattern, SearchBudget* budget = nullptr) {
  if (pattern.vertex_count() == 0) throw std::invalid_argument("pattern must have a vertex");
  return !find_induced_copy(host, pattern, budget).has_value();
}

}  // namespace hfree
