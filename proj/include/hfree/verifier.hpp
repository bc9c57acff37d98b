#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfree/constructions.hpp"
#include "hfree/generate.hpp"
#include "hfree/graph_ops.hpp"
#include "hfree/io.hpp"
#include "hfree/named_graphs.hpp"
#include "hfree/pattern_analysis.hpp"
#include "hfree/planner.hpp"
#include "hfree/solver.hpp"

namespace hfree {

enum class ReportStatus { pass, pass_with_skips, fail, unsupported };

inline std::string_view to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::pass: return "pass";
    case ReportStatus::pass_with_skips: return "pass-with-skips";
    case ReportStatus::fail: return "fail";
    case ReportStatus::unsupported: return "unsupported";
  }
  return "?";
}

struct Failure {
  std::string check;                // what disagreed
  std::optional<Instance> instance; // counterexample, when there is one
  std::optional<bool> source;       // expected answer
  std::optional<bool> target;       // answer obtained
  std::string detail;
};

struct VerificationReport {
  std::string suite;
  std::size_t cases = 0;
  std::size_t skips = 0;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  bool unsupported = false;

  /// More than 10% skipped cases fails the suite.
  ReportStatus status() const {
    if (unsupported) return ReportStatus::unsupported;
    if (!failures.empty() || skips * 10 > cases) return ReportStatus::fail;
    return skips > 0 ? ReportStatus::pass_with_skips : ReportStatus::pass;
  }
  bool ok() const {
    auto s = status();
    return s == ReportStatus::pass || s == ReportStatus::pass_with_skips;
  }

  void fail(std::string check, std::string detail = {}) {
    failures.push_back({std::move(check), std::nullopt, std::nullopt, std::nullopt, std::move(detail)});
  }
  void merge(const VerificationReport& other) {
    cases += other.cases;
    skips += other.skips;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

inline std::string format_report(const VerificationReport& r) {
  std::ostringstream out;
  out << "suite=" << r.suite << " cases=" << r.cases << " skips=" << r.skips
      << " failures=" << r.failures.size() << " status=" << to_string(r.status()) << '\n';
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  for (const auto& f : r.failures) {
    out << "failure check=" << f.check;
    if (f.source) out << " source=" << yn(*f.source);
    if (f.target) out << " target=" << yn(*f.target);
    if (!f.detail.empty()) out << " detail=" << f.detail;
    if (f.instance) out << " instance=" << inline_text(write_instance(*f.instance));
    out << '\n';
  }
  for (const auto& n : r.notes) out << "note " << n << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Host generation
// ---------------------------------------------------------------------------

struct SweepOptions {
  enum class Mode { exhaustive, random };

  Mode mode = Mode::exhaustive;
  std::size_t max_vertices = 5;
  std::size_t min_budget = 1;
  std::size_t max_budget = 2;
  std::size_t count = 100;     // random mode only
  std::uint64_t seed = 1;      // random mode only
  double edge_probability = 0.5;
  std::uint64_t work_limit = 20'000'000;  // per solver call
  GadgetFault fault = GadgetFault::none;
};

/// Instances in a fixed order: exhaustive mode walks every graph class on
/// 1..max_vertices vertices and every budget; random mode draws G(n,p) hosts.
inline std::vector<Instance> sweep_instances(const SweepOptions& opt) {
  if (opt.min_budget > opt.max_budget) throw std::invalid_argument("empty budget range");
  std::vector<Instance> out;
  if (opt.mode == SweepOptions::Mode::exhaustive) {
    for (const Graph& g : nonisomorphic_graphs_up_to(opt.max_vertices)) {
      for (std::size_t k = opt.min_budget; k <= opt.max_budget; ++k) out.push_back({g, k});
    }
    return out;
  }
  if (opt.max_vertices == 0) throw std::invalid_argument("random hosts need max_vertices >= 1");
  std::mt19937_64 rng(opt.seed);
  for (std::size_t i = 0; i < opt.count; ++i) {
    const std::size_t n = 1 + uniform_index(rng, opt.max_vertices);
    const std::size_t k = opt.min_budget + uniform_index(rng, opt.max_budget - opt.min_budget + 1);
    out.push_back({random_graph(rng, n, opt.edge_probability), k});
  }
  return out;
}

namespace detail {

inline std::string sweep_note(const SweepOptions& opt) {
  std::string s = opt.mode == SweepOptions::Mode::exhaustive
                      ? "hosts=exhaustive n<=" + std::to_string(opt.max_vertices)
                      : "hosts=random n<=" + std::to_string(opt.max_vertices) + " count=" +
                            std::to_string(opt.count) + " seed=" + std::to_string(opt.seed);
  return s + " k=" + std::to_string(opt.min_budget) + ".." + std::to_string(opt.max_budget);
}

// Compares the source answer with the answer after `transform`, recording
// mismatches and capacity skips.
template <class Transform>
void check_equivalence(VerificationReport& report, const Graph& source, const Graph& target,
                       const SweepOptions& opt, Transform transform) {
  for (const Instance& inst : sweep_instances(opt)) {
    ++report.cases;
    try {
      const bool before = solve_branching(inst, source, nullptr, opt.work_limit).has_value();
      const Instance reduced = transform(inst);
      if (reduced.budget != inst.budget) {
        report.failures.push_back({"budget", inst, std::nullopt, std::nullopt,
                                   "budget " + std::to_string(reduced.budget)});
        continue;
      }
      const bool after = solve_branching(reduced, target, nullptr, opt.work_limit).has_value();
      if (before != after) report.failures.push_back({"equivalence", inst, before, after, {}});
    } catch (const CapacityError&) {
      ++report.skips;
    }
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Step equivalence
// ---------------------------------------------------------------------------

/// For every generated source instance, the step's source answer must equal
/// the target answer on apply_step's output.
inline VerificationReport verify_step_equivalence(const ReductionStep& step, const SweepOptions& opt) {
  validate(step);
  VerificationReport report;
  report.suite = step_name(step);
  const Graph source = source_pattern(step);
  const Graph target = target_pattern(step);
  detail::check_equivalence(report, source, target, opt,
                            [&](const Instance& inst) { return apply_step(step, inst, opt.fault); });
  report.notes.push_back(detail::sweep_note(opt));
  if (opt.fault != GadgetFault::none) report.notes.push_back("gadget fault injected");
  return report;
}

// ---------------------------------------------------------------------------
// Gadget structure
// ---------------------------------------------------------------------------

namespace detail {

inline Graph original_graph(const GadgetTrace& trace) {
  return Graph::from_edges(trace.original_vertices.size(), trace.original_edges);
}

inline void check_originals(VerificationReport& r, const GadgetTrace& trace, const Graph& output) {
  const std::size_t n = trace.original_vertices.size();
  if (output.vertex_count() < n) {
    r.fail("originals", "output smaller than input");
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (trace.original_vertices[i] != i) r.fail("originals", "original vertex ids moved");
  }
  if (output.induced(trace.original_vertices) != original_graph(trace)) {
    r.fail("originals", "edges among original vertices changed");
  }
}

// Every output edge must be an original edge or belong to exactly one branch.
inline void check_edge_accounting(VerificationReport& r, const GadgetTrace& trace, const Graph& output) {
  std::size_t expected = trace.original_edges.size();
  std::set<Edge> claimed;
  for (const auto& base : trace.bases) {
    for (const auto& branch : base.branches) {
      for (const Edge& e : branch.edges) {
        if (!output.has_edge(e.u, e.v)) r.fail("branch-edges", "traced edge missing from output");
        if (!claimed.insert(e).second) r.fail("branch-edges", "edge claimed by two branches");
      }
      expected += branch.edges.size();
    }
  }
  if (output.edge_count() != expected) r.fail("extra-edges", "output has untraced edges");
}

inline void check_fresh_vertices(VerificationReport& r, const GadgetTrace& trace, const Graph& output,
                                 std::size_t first_fresh) {
  std::vector<bool> seen(output.vertex_count(), false);
  std::size_t fresh = 0;
  for (const auto& base : trace.bases) {
    for (const auto& branch : base.branches) {
      for (Vertex v : branch.vertices) {
        if (v < first_fresh || v >= output.vertex_count() || seen[v]) {
          r.fail("branch-disjoint", "branch vertex " + std::to_string(v + 1) + " reused or not fresh");
          return;
        }
        seen[v] = true;
        ++fresh;
      }
    }
  }
  if (first_fresh + fresh != output.vertex_count()) r.fail("extra-vertices", "output has untraced vertices");
}

inline void check_branch_trace(VerificationReport& r, const GadgetTrace& trace, const Graph& output,
                               const PatternSpec& spec, std::size_t k) {
  const Graph& h = spec.pattern;
  const Graph core = h.induced(spec.designated);
  const VertexSubset rest = undesignated(spec);
  check_originals(r, trace, output);
  check_fresh_vertices(r, trace, output, trace.original_vertices.size());
  check_edge_accounting(r, trace, output);

  // bases are exactly the subgraph copies of H[V'] in the input
  const auto expected = enumerate_subgraph_copies(original_graph(trace), core);
  if (expected.size() != trace.bases.size()) {
    r.fail("bases", "expected " + std::to_string(expected.size()) + " bases, traced " +
                        std::to_string(trace.bases.size()));
  } else {
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (expected[i].vertices != trace.bases[i].vertices || expected[i].edges != trace.bases[i].edges) {
        r.fail("bases", "base " + std::to_string(i + 1) + " is not the expected copy");
      }
    }
  }

  const auto regular = regular_degree(h);
  const bool regular_case = regular && *regular >= 3 && spec.designated.size() == 3;
  if (regular_case) {
    // V \ V' dominates R
    std::vector<bool> covered(h.vertex_count(), false);
    for (Vertex v : rest) {
      covered[v] = true;
      for (Vertex w : h.neighbors(v)) covered[w] = true;
    }
    if (std::find(covered.begin(), covered.end(), false) != covered.end()) {
      r.fail("regular-dominating", "undesignated vertices do not dominate the pattern");
    }
  }

  for (std::size_t bi = 0; bi < trace.bases.size(); ++bi) {
    const Base& base = trace.bases[bi];
    const std::string where = "base " + std::to_string(bi + 1);
    if (base.branches.size() != k + 1) {
      r.fail("branch-count", where + " has " + std::to_string(base.branches.size()) + " branches");
    }
    if (base.map.to_host.size() != core.vertex_count()) {
      r.fail("base-map", where + " map has the wrong size");
      continue;
    }
    for (const Edge& e : core.edges()) {
      if (!output.has_edge(base.map[e.u], base.map[e.v])) r.fail("base-map", where + " map drops an edge");
    }
    std::set<Vertex> seen(base.vertices.begin(), base.vertices.end());
    for (std::size_t j = 0; j < base.branches.size(); ++j) {
      const Branch& branch = base.branches[j];
      const std::string at = where + " branch " + std::to_string(j + 1);
      if (branch.vertices.size() != rest.size()) {
        r.fail("branch-size", at + " has " + std::to_string(branch.vertices.size()) + " vertices");
        continue;
      }
      for (Vertex v : branch.vertices) {
        if (!seen.insert(v).second) r.fail("branch-intersection", at + " overlaps the base or a sibling");
      }
      // phi: designated[i] -> base.map[i], rest[j] -> branch.vertices[j]
      std::vector<Vertex> phi(h.vertex_count());
      for (std::size_t i = 0; i < spec.designated.size(); ++i) phi[spec.designated[i]] = base.map[i];
      for (std::size_t i = 0; i < rest.size(); ++i) phi[rest[i]] = branch.vertices[i];
      EdgeSet image;
      for (const Edge& e : h.edges()) {
        if (!std::binary_search(spec.designated.begin(), spec.designated.end(), e.u) ||
            !std::binary_search(spec.designated.begin(), spec.designated.end(), e.v)) {
          image.emplace_back(phi[e.u], phi[e.v]);
        }
      }
      normalize(image);
      if (image != branch.edges) r.fail("branch-iso", at + " edges do not realize the pattern");
      if (regular_case) {
        for (Vertex v : branch.vertices) {
          if (output.degree(v) != *regular) r.fail("regular-degree", at + " vertex degree differs from r");
        }
        if (!induces_connected(output, branch.vertices)) r.fail("regular-connected", at + " is disconnected");
      }
    }
  }
}

inline void check_clique_trace(VerificationReport& r, const GadgetTrace& trace, const Graph& output,
                               std::size_t k) {
  check_originals(r, trace, output);
  check_fresh_vertices(r, trace, output, trace.original_vertices.size());
  check_edge_accounting(r, trace, output);
  if (trace.bases.size() != trace.original_vertices.size()) r.fail("bases", "one base per vertex expected");
  for (std::size_t bi = 0; bi < trace.bases.size(); ++bi) {
    const Base& base = trace.bases[bi];
    const std::string where = "vertex " + std::to_string(bi + 1);
    if (base.vertices != VertexSubset{bi} || base.branches.size() != 1) {
      r.fail("bases", where + " trace malformed");
      continue;
    }
    const Branch& branch = base.branches.front();
    if (branch.vertices.size() != k + 1) {
      r.fail("branch-size", where + " has " + std::to_string(branch.vertices.size()) + " new vertices");
    }
    VertexSubset clique = branch.vertices;
    clique.push_back(bi);
    normalize(clique);
    for (Vertex v : branch.vertices) {
      // closed neighbourhood of a new vertex is exactly the clique
      VertexSubset closed(output.neighbors(v).begin(), output.neighbors(v).end());
      closed.push_back(v);
      normalize(closed);
      if (closed != clique) r.fail("clique-neighbourhood", where + " new vertex has a foreign neighbour");
    }
    const Graph induced = output.induced(clique);
    if (induced.edge_count() != clique.size() * (clique.size() - 1) / 2) {
      r.fail("clique", where + " attachment is not a clique");
    }
  }
}

inline void check_join_trace(VerificationReport& r, const GadgetTrace& trace, const Graph& output,
                             const Graph& h1, std::size_t k) {
  if (trace.bases.size() != 1) {
    r.fail("bases", "join trace must have one base");
    return;
  }
  const Base& base = trace.bases.front();
  if (base.branches.size() != k + 1) {
    r.fail("branch-count", "join has " + std::to_string(base.branches.size()) + " copies");
  }
  check_fresh_vertices(r, trace, output, 0);
  for (std::size_t j = 0; j < base.branches.size(); ++j) {
    const auto& copy = base.branches[j].vertices;
    if (copy.size() != h1.vertex_count() || !are_isomorphic(output.induced(copy), h1)) {
      r.fail("branch-iso", "copy " + std::to_string(j + 1) + " does not induce the pattern");
    }
    for (std::size_t d = j + 1; d < base.branches.size(); ++d) {
      bool joined = true;
      for (Vertex a : copy) {
        for (Vertex b : base.branches[d].vertices) joined = joined && output.has_edge(a, b);
      }
      if (!joined) {
        r.fail("join", "copies " + std::to_string(j + 1) + " and " + std::to_string(d + 1) + " not fully joined");
      }
    }
  }
  if (!is_free(output, copies(h1, 2))) r.fail("join-2h-free", "join gadget contains two disjoint copies");
}

}  // namespace detail

/// Structural postconditions of a construction. For branch traces `spec` is
/// the pattern and designated set; for join traces `spec.pattern` is H1 and
/// the designated set is ignored; clique traces ignore `spec`.
inline VerificationReport verify_gadget_structure(const GadgetTrace& trace, const Graph& output,
                                                  const PatternSpec& spec, std::size_t k) {
  VerificationReport r;
  r.cases = 1;
  switch (trace.kind) {
    case GadgetKind::branch:
      r.suite = "gadget-branch";
      detail::check_branch_trace(r, trace, output, spec, k);
      break;
    case GadgetKind::clique_attach:
      r.suite = "gadget-clique-attach";
      detail::check_clique_trace(r, trace, output, k);
      break;
    case GadgetKind::join:
      r.suite = "gadget-join";
      detail::check_join_trace(r, trace, output, spec.pattern, k);
      break;
  }
  return r;
}

/// Seeded random (g, k, spec) triples through branch_gadget, each checked
/// structurally.
inline VerificationReport verify_random_gadgets(std::size_t count, std::uint64_t seed,
                                                GadgetFault fault = GadgetFault::none) {
  VerificationReport total;
  total.suite = "gadget-structure";
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const Graph g = random_graph(rng, 1 + uniform_index(rng, 6), 0.5);
    const std::size_t k = 1 + uniform_index(rng, 3);
    const std::size_t p = 2 + uniform_index(rng, 4);
    PatternSpec spec{random_graph(rng, p, 0.6), {}};
    // nonempty proper subset
    while (spec.designated.empty() || spec.designated.size() == p) {
      spec.designated.clear();
      for (Vertex v = 0; v < p; ++v) {
        if (unit_uniform(rng) < 0.5) spec.designated.push_back(v);
      }
    }
    auto result = branch_gadget(g, k, spec, fault);
    auto r = verify_gadget_structure(result.trace, result.graph, spec, k);
    for (auto& f : r.failures) {
      f.instance = Instance{g, k};
      f.detail += " pattern=" + inline_text(write_graph(spec.pattern)) +
                  " designated=" + format_vertex_list(spec.designated);
    }
    total.merge(r);
  }
  total.notes.push_back("seed=" + std::to_string(seed) + " triples=" + std::to_string(count));
  return total;
}

// ---------------------------------------------------------------------------
// Solver agreement
// ---------------------------------------------------------------------------

inline std::vector<Graph> agreement_patterns() {
  return {graphs::path(3), graphs::path(4), graphs::complete(3),
          graphs::matching(2), graphs::complete(4), graphs::cycle(4)};
}

/// solve_branching and solve_bruteforce agree, and every "yes" certifies.
inline VerificationReport verify_solver_agreement(std::size_t max_vertices, std::size_t max_budget) {
  VerificationReport r;
  r.suite = "solver-agreement";
  const auto patterns = agreement_patterns();
  for (const Graph& g : nonisomorphic_graphs_up_to(max_vertices)) {
    for (const Graph& p : patterns) {
      for (std::size_t k = 0; k <= max_budget; ++k) {
        ++r.cases;
        const Instance inst{g, k};
        try {
          auto fast = solve_branching(inst, p);
          auto slow = solve_bruteforce(inst, p);
          const std::string which = " pattern=" + inline_text(write_graph(p));
          if (fast.has_value() != slow.has_value()) {
            r.failures.push_back({"agreement", inst, slow.has_value(), fast.has_value(), which});
          } else if (fast && (!certifies(inst, p, *fast) || !certifies(inst, p, *slow))) {
            r.failures.push_back({"certificate", inst, std::nullopt, std::nullopt, which});
          }
        } catch (const CapacityError&) {
          ++r.skips;
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Catalog sweep
// ---------------------------------------------------------------------------

inline std::string classification_label(const ClassificationResult& c) {
  auto text = detail::kind_text(c.kind);
  return text.params == "-" ? text.name : text.name + ":" + text.params;
}

/// Plans one pattern and replays the whole chain on the generated base
/// instances: base answer must equal the answer for H on the chain output.
inline VerificationReport verify_chain(const Graph& h, const SweepOptions& opt) {
  VerificationReport r;
  const auto cls = classify(h);
  r.suite = "chain:" + classification_label(cls);
  if (!cls.supported()) {
    r.unsupported = true;
    r.notes.push_back(format_classification(cls));
    return r;
  }
  if (cls.is<CompositeLargest>() && choose_largest_component(h).ambiguous) {
    r.notes.push_back("several non-isomorphic largest components; chose the smallest canonical form");
  }
  const ReductionPlan p = plan(h);
  if (auto why = plan_mismatch(p); !why.empty()) {
    r.fail("plan", why);
    return r;
  }
  detail::check_equivalence(r, p.base.pattern(), h, opt,
                            [&](const Instance& inst) { return apply_plan(p, inst, opt.fault); });
  r.notes.push_back("steps=" + std::to_string(p.steps.size()) + " " + detail::sweep_note(opt));
  return r;
}

inline std::vector<VerificationReport> sweep_acceptance(const std::vector<Graph>& catalog,
                                                        const SweepOptions& opt) {
  std::vector<VerificationReport> out;
  for (const Graph& h : catalog) out.push_back(verify_chain(h, opt));
  return out;
}

/// Patterns whose classification the acceptance criteria pin down.
inline std::vector<Graph> acceptance_catalog() {
  return {graphs::star(3),
          graphs::star(4),
          graphs::twin_star(1, 2),
          graphs::twin_star(2, 2),
          graphs::path(5),
          graphs::path(6),
          graphs::cycle(4),
          graphs::cycle(5),
          graphs::complete(4),
          graphs::petersen(),
          graphs::matching(2),
          graphs::matching(3),
          disjoint_union({graphs::matching(2), graphs::empty(1)}),
          disjoint_union({graphs::complete(3), graphs::complete(2)})};
}

// ---------------------------------------------------------------------------
// Named suites
// ---------------------------------------------------------------------------

/// The steps the acceptance criteria sweep, by suite name.
inline std::optional<ReductionStep> named_step(std::string_view suite) {
  if (suite == "star-step") return StarStep{3};
  if (suite == "twin-star-step") return TwinStarStep{2, 2};
  if (suite == "degree-strip") return DegreeStrip{graphs::path(5), 1};
  if (suite == "regular-carve") return RegularCarve{graphs::complete(4), {0, 1, 2}};
  if (suite == "component-lift") {
    return ComponentLift{disjoint_union({graphs::complete(3), graphs::complete(2)}), {0, 1, 2}};
  }
  if (suite == "copy-step") return CopyStep{graphs::complete(2), 2};
  if (suite == "copy-step-3") return CopyStep{graphs::complete(2), 3};
  return std::nullopt;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "star-step", "twin-star-step", "degree-strip",     "regular-carve",    "component-lift",
      "copy-step", "copy-step-3",    "solver-agreement", "gadget-structure", "catalog"};
  return names;
}

/// Runs a named suite. Budget range and host size come from `opt`; the
/// gadget suite draws `opt.count` triples from `opt.seed`.
inline std::vector<VerificationReport> run_suite(std::string_view suite, const SweepOptions& opt) {
  if (auto step = named_step(suite)) {
    auto r = verify_step_equivalence(*step, opt);
    r.suite = std::string(suite);
    return {r};
  }
  if (suite == "solver-agreement") return {verify_solver_agreement(opt.max_vertices, opt.max_budget)};
  if (suite == "gadget-structure") return {verify_random_gadgets(opt.count, opt.seed, opt.fault)};
  if (suite == "catalog") return sweep_acceptance(acceptance_catalog(), opt);
  throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

}  // namespace hfree
