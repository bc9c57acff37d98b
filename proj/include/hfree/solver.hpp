#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfree/graph.hpp"
#include "hfree/graph_ops.hpp"
#include "hfree/instance.hpp"
#include "hfree/subgraph_search.hpp"

namespace hfree {

/// Edge set F with |F| <= budget whose removal makes the host pattern-free.
/// A solver returning std::nullopt means "no".
struct Solution {
  EdgeSet edges;

  friend bool operator==(const Solution&, const Solution&) = default;
};

struct SolverStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::size_t max_depth = 0;
};

namespace detail {

class BranchingSolver {
 public:
  BranchingSolver(const Graph& pattern, SearchBudget& budget, SolverStats& stats)
      : pattern_(pattern), pattern_edges_(pattern.edges()), budget_(budget), stats_(stats) {}

  bool solve(Graph& g, std::size_t remaining, std::size_t depth, EdgeSet& removed) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    auto copy = find_induced_copy(g, pattern_, &budget_);
    if (!copy) {
      ++stats_.leaves;
      return true;
    }
    if (remaining == 0) {
      ++stats_.leaves;
      return false;
    }
    for (const Edge& pe : pattern_edges_) {
      const Edge e((*copy)[pe.u], (*copy)[pe.v]);
      g.remove_edge(e.u, e.v);
      removed.push_back(e);
      if (solve(g, remaining - 1, depth + 1, removed)) return true;
      removed.pop_back();
      g.add_edge(e.u, e.v);
    }
    return false;
  }

 private:
  const Graph& pattern_;
  EdgeSet pattern_edges_;
  SearchBudget& budget_;
  SolverStats& stats_;
};

}  // namespace detail

/// Bounded search tree: find an induced copy, branch on deleting each of its
/// edges. At most |E(pattern)|^budget leaves. `work_limit` caps the total
/// subgraph-search effort and raises CapacityError when exceeded.
inline std::optional<Solution> solve_branching(const Instance& inst, const Graph& pattern,
                                               SolverStats* stats = nullptr,
                                               std::uint64_t work_limit = SearchBudget::unlimited) {
  if (pattern.edge_count() == 0) {
    throw std::invalid_argument("solve_branching: pattern must have at least one edge");
  }
  SolverStats local;
  SolverStats& s = stats ? *stats : local;
  SearchBudget budget(work_limit);
  Graph g = inst.graph;
  EdgeSet removed;
  detail::BranchingSolver solver(pattern, budget, s);
  if (!solver.solve(g, inst.budget, 0, removed)) return std::nullopt;
  normalize(removed);
  return Solution{std::move(removed)};
}

/// Number of edge subsets of size <= k among m edges, saturating at `cap + 1`.
inline std::uint64_t subsets_up_to(std::size_t m, std::size_t k, std::uint64_t cap) {
  std::uint64_t total = 0;
  std::uint64_t term = 1;  // C(m, s)
  for (std::size_t s = 0; s <= k && s <= m; ++s) {
    if (s > 0) {
      // C(m,s) = C(m,s-1) * (m-s+1) / s, exact at every step
      const unsigned __int128 next = static_cast<unsigned __int128>(term) * (m - s + 1) / s;
      if (next > cap) return cap + 1;
      term = static_cast<std::uint64_t>(next);
    }
    total += term;
    if (total > cap) return cap + 1;
  }
  return total;
}

/// Exhaustive oracle: tries every edge subset of size <= budget, smallest
/// first, in lexicographic order.
inline std::optional<Solution> solve_bruteforce(const Instance& inst, const Graph& pattern,
                                                std::uint64_t max_subsets = 10'000'000) {
  if (pattern.vertex_count() == 0) throw std::invalid_argument("pattern must have a vertex");
  const EdgeSet all = inst.graph.edges();
  const std::size_t m = all.size();
  if (subsets_up_to(m, inst.budget, max_subsets) > max_subsets) {
    throw CapacityError("brute force would enumerate more than " + std::to_string(max_subsets) +
                        " edge subsets");
  }
  for (std::size_t size = 0; size <= inst.budget && size <= m; ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      Graph g = inst.graph;
      EdgeSet removed;
      for (std::size_t i : pick) {
        g.remove_edge(all[i].u, all[i].v);
        removed.push_back(all[i]);
      }
      if (is_free(g, pattern)) return Solution{std::move(removed)};
      // advance to the next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

/// True iff removing `solution` from the instance graph leaves it pattern-free
/// within budget.
inline bool certifies(const Instance& inst, const Graph& pattern, const Solution& solution) {
  if (solution.edges.size() > inst.budget) return false;
  for (const Edge& e : solution.edges) {
    if (!inst.graph.has_edge(e.u, e.v)) return false;
  }
  return is_free(without_edges(inst.graph, solution.edges), pattern);
}

/// `yes e u1 v1 e u2 v2 ...` (1-based) or `no`.
inline std::string format_solution(const std::optional<Solution>& solution) {
  if (!solution) return "no";
  std::string out = "yes";
  for (const Edge& e : solution->edges) {
    out += " e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1);
  }
  return out;
}

}  // namespace hfree
