#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfree/graph.hpp"
#include "hfree/graph_ops.hpp"
#include "hfree/subgraph_search.hpp"

namespace hfree {

/// Forbidden pattern H with a designated vertex subset V'. Vertex ids of
/// the pattern double as its fixed labelling.
struct PatternSpec {
  Graph pattern;
  VertexSubset designated;
};

enum class GadgetKind { branch, clique_attach, join };

/// Deliberate defects for mutation testing of the verifier. Production
/// callers always use `none`.
enum class GadgetFault {
  none,
  missing_branch,       // k branches per base instead of k+1
  dropped_branch_edge,  // first added edge of every branch omitted
  partial_join,         // join gadget links only consecutive copies
};

struct Branch {
  /// vertices[j] realizes the j-th undesignated pattern vertex (ascending ids).
  VertexSubset vertices;
  EdgeSet edges;
};

struct Base {
  VertexSubset vertices;
  EdgeSet edges;
  /// Maps vertex i of H[V'] (i.e. designated[i]) into the host.
  IsoMap map;
  std::vector<Branch> branches;
};

/// Bookkeeping emitted by a construction: what was attached, and where.
struct GadgetTrace {
  GadgetKind kind = GadgetKind::branch;
  VertexSubset original_vertices;
  EdgeSet original_edges;
  std::vector<Base> bases;
};

struct GadgetResult {
  Graph graph;
  GadgetTrace trace;
};

namespace detail {

inline VertexSubset undesignated(const PatternSpec& spec) {
  VertexSubset rest;
  std::size_t j = 0;
  for (Vertex v = 0; v < spec.pattern.vertex_count(); ++v) {
    if (j < spec.designated.size() && spec.designated[j] == v) {
      ++j;
    } else {
      rest.push_back(v);
    }
  }
  return rest;
}

inline void check_spec(const PatternSpec& spec) {
  const auto& d = spec.designated;
  if (d.empty() || d.size() >= spec.pattern.vertex_count()) {
    throw std::invalid_argument("designated set must be a nonempty proper subset of the pattern");
  }
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] >= spec.pattern.vertex_count() || (i > 0 && d[i] <= d[i - 1])) {
      throw std::invalid_argument("designated set must be sorted, distinct and in range");
    }
  }
}

inline GadgetTrace start_trace(GadgetKind kind, const Graph& g) {
  GadgetTrace trace;
  trace.kind = kind;
  trace.original_vertices.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) trace.original_vertices[v] = v;
  trace.original_edges = g.edges();
  return trace;
}

inline Graph copy_into(const Graph& g, std::size_t total) {
  Graph out(total);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  return out;
}

}  // namespace detail

/// Attaches k+1 branches to every (not necessarily induced) copy C of
/// H[V'] in g, each completing C to a copy of H that agrees with C's
/// isomorphism onto H[V']. Branch ids follow the originals, grouped by base
/// and then by branch index.
inline GadgetResult branch_gadget(const Graph& g, std::size_t k, const PatternSpec& spec,
                                  GadgetFault fault = GadgetFault::none) {
  if (k == 0) throw std::invalid_argument("branch_gadget: k must be positive");
  detail::check_spec(spec);

  const Graph& h = spec.pattern;
  const Graph core = h.induced(spec.designated);
  const VertexSubset rest = detail::undesignated(spec);

  // index of each pattern vertex inside its side (designated or rest)
  std::vector<std::size_t> slot(h.vertex_count());
  std::vector<bool> is_designated(h.vertex_count(), false);
  for (std::size_t i = 0; i < spec.designated.size(); ++i) {
    slot[spec.designated[i]] = i;
    is_designated[spec.designated[i]] = true;
  }
  for (std::size_t j = 0; j < rest.size(); ++j) slot[rest[j]] = j;

  EdgeSet attached;  // edges of H with an undesignated endpoint
  for (const Edge& e : h.edges()) {
    if (!is_designated[e.u] || !is_designated[e.v]) attached.push_back(e);
  }

  const auto copies = enumerate_subgraph_copies(g, core);
  const std::size_t per_base = fault == GadgetFault::missing_branch ? k : k + 1;
  const std::size_t total = g.vertex_count() + copies.size() * per_base * rest.size();

  GadgetResult result{detail::copy_into(g, total), detail::start_trace(GadgetKind::branch, g)};
  Vertex next = g.vertex_count();
  for (const auto& copy : copies) {
    Base base{copy.vertices, copy.edges, copy.map, {}};
    for (std::size_t b = 0; b < per_base; ++b) {
      Branch branch;
      const Vertex first = next;
      for (std::size_t j = 0; j < rest.size(); ++j) branch.vertices.push_back(next++);
      auto image = [&](Vertex x) { return is_designated[x] ? copy.map[slot[x]] : first + slot[x]; };
      bool skip = fault == GadgetFault::dropped_branch_edge;
      for (const Edge& e : attached) {
        if (skip) {
          skip = false;
          continue;
        }
        const Edge mapped(image(e.u), image(e.v));
        result.graph.add_edge(mapped.u, mapped.v);
        branch.edges.push_back(mapped);
      }
      normalize(branch.edges);
      base.branches.push_back(std::move(branch));
    }
    result.trace.bases.push_back(std::move(base));
  }
  return result;
}

/// Gives every vertex v a private set of k+1 new vertices that forms a
/// clique with v.
inline GadgetResult clique_attach(const Graph& g, std::size_t k, GadgetFault fault = GadgetFault::none) {
  if (k == 0) throw std::invalid_argument("clique_attach: k must be positive");
  const std::size_t n = g.vertex_count();
  const std::size_t fresh = fault == GadgetFault::missing_branch ? k : k + 1;

  GadgetResult result{detail::copy_into(g, n * (fresh + 1)),
                      detail::start_trace(GadgetKind::clique_attach, g)};
  for (Vertex v = 0; v < n; ++v) {
    Branch branch;
    for (std::size_t j = 0; j < fresh; ++j) branch.vertices.push_back(n + v * fresh + j);
    std::vector<Vertex> clique{v};
    clique.insert(clique.end(), branch.vertices.begin(), branch.vertices.end());
    for (std::size_t a = 0; a < clique.size(); ++a) {
      for (std::size_t b = a + 1; b < clique.size(); ++b) {
        if (fault == GadgetFault::dropped_branch_edge && a == 0 && b == 1) continue;
        result.graph.add_edge(clique[a], clique[b]);
        branch.edges.emplace_back(clique[a], clique[b]);
      }
    }
    normalize(branch.edges);
    result.trace.bases.push_back(Base{{v}, {}, IsoMap{{v}}, {std::move(branch)}});
  }
  return result;
}

/// k+1 disjoint copies of a connected h1 with every cross-copy pair joined.
/// The trace has one empty base whose branches are the copies.
inline GadgetResult join_gadget_traced(const Graph& h1, std::size_t k,
                                       GadgetFault fault = GadgetFault::none) {
  if (k == 0) throw std::invalid_argument("join_gadget: k must be positive");
  if (!is_connected(h1)) throw std::invalid_argument("join_gadget: pattern must be connected");
  const std::size_t p = h1.vertex_count();
  const std::size_t count = fault == GadgetFault::missing_branch ? k : k + 1;

  GadgetResult result{Graph(count * p), {}};
  result.trace.kind = GadgetKind::join;
  Base base;
  const EdgeSet inner = h1.edges();
  for (std::size_t c = 0; c < count; ++c) {
    Branch copy;
    for (Vertex v = 0; v < p; ++v) copy.vertices.push_back(c * p + v);
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (fault == GadgetFault::dropped_branch_edge && i == 0) continue;
      const Edge& e = inner[i];
      result.graph.add_edge(c * p + e.u, c * p + e.v);
      copy.edges.emplace_back(c * p + e.u, c * p + e.v);
    }
    base.branches.push_back(std::move(copy));
  }
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t d = c + 1; d < count; ++d) {
      if (fault == GadgetFault::partial_join && d != c + 1) continue;
      for (Vertex a = 0; a < p; ++a) {
        for (Vertex b = 0; b < p; ++b) result.graph.add_edge(c * p + a, d * p + b);
      }
    }
  }
  result.trace.bases.push_back(std::move(base));
  return result;
}

inline Graph join_gadget(const Graph& h1, std::size_t k, GadgetFault fault = GadgetFault::none) {
  return join_gadget_traced(h1, k, fault).graph;
}

// Text form, 1-based:
//   trace kind=<branch|clique-attach|join> bases=<b>
//   original vertices=<list> edges=<list>
//   base <i> vertices=<list> edges=<list> map=<list>
//   branch <i> <j> vertices=<list> edges=<list>

inline std::string format_edge_list(const EdgeSet& edges) {
  if (edges.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(edges[i].u + 1) + "-" + std::to_string(edges[i].v + 1);
  }
  return out;
}

inline std::string format_trace(const GadgetTrace& trace) {
  auto list = [](const std::vector<Vertex>& vs) {
    if (vs.empty()) return std::string("-");
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(vs[i] + 1);
    }
    return out;
  };
  static constexpr const char* names[] = {"branch", "clique-attach", "join"};
  std::ostringstream out;
  out << "trace kind=" << names[static_cast<int>(trace.kind)] << " bases=" << trace.bases.size() << '\n';
  out << "original vertices=" << list(trace.original_vertices)
      << " edges=" << format_edge_list(trace.original_edges) << '\n';
  for (std::size_t i = 0; i < trace.bases.size(); ++i) {
    const Base& b = trace.bases[i];
    out << "base " << i + 1 << " vertices=" << list(b.vertices) << " edges=" << format_edge_list(b.edges)
        << " map=" << list(b.map.to_host) << '\n';
    for (std::size_t j = 0; j < b.branches.size(); ++j) {
      out << "branch " << i + 1 << ' ' << j + 1 << " vertices=" << list(b.branches[j].vertices)
          << " edges=" << format_edge_list(b.branches[j].edges) << '\n';
    }
  }
  return out.str();
}

}  // namespace hfree
