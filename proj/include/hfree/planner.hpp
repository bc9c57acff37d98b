#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hfree/canonical.hpp"
#include "hfree/constructions.hpp"
#include "hfree/graph.hpp"
#include "hfree/graph_ops.hpp"
#include "hfree/instance.hpp"
#include "hfree/io.hpp"
#include "hfree/named_graphs.hpp"
#include "hfree/pattern_analysis.hpp"

namespace hfree {

// ---------------------------------------------------------------------------
// Base problems and steps
// ---------------------------------------------------------------------------

/// Terminal NP-hard problem a chain starts from.
struct BaseProblem {
  enum class Kind { p3_free, p4_free, cycle_free, two_k2_free };

  Kind kind = Kind::p3_free;
  std::size_t cycle_length = 0;  // only for cycle_free, >= 3

  static BaseProblem p3_free() { return {Kind::p3_free, 0}; }
  static BaseProblem p4_free() { return {Kind::p4_free, 0}; }
  static BaseProblem cycle_free(std::size_t length) {
    if (length < 3) throw std::invalid_argument("cycle base needs length >= 3");
    return {Kind::cycle_free, length};
  }
  static BaseProblem two_k2_free() { return {Kind::two_k2_free, 0}; }

  Graph pattern() const {
    switch (kind) {
      case Kind::p3_free: return graphs::path(3);
      case Kind::p4_free: return graphs::path(4);
      case Kind::cycle_free: return graphs::cycle(cycle_length);
      case Kind::two_k2_free: return graphs::matching(2);
    }
    throw std::logic_error("unknown base problem");
  }

  friend bool operator==(const BaseProblem&, const BaseProblem&) = default;
};

/// S_{l-1} -> S_l via clique attachment. l >= 3.
struct StarStep {
  std::size_t leaves = 0;
};
/// S_{l1-1,l2-1} -> S_{l1,l2} via clique attachment. l1,l2 >= 1, l1+l2 >= 3.
struct TwinStarStep {
  std::size_t l1 = 0;
  std::size_t l2 = 0;
};
/// H[{v : deg(v) > d}] -> H via branch gadgets.
struct DegreeStrip {
  Graph pattern;
  std::size_t degree = 0;
};
/// R[V'] -> R for connected r-regular R (r >= 3), |V'| = 3, R[V'] a P3 or
/// K3 and R - V' connected; via branch gadgets.
struct RegularCarve {
  Graph pattern;
  VertexSubset designated;
};
/// H[V'] -> H where V' spans all components isomorphic to a largest one;
/// via branch gadgets.
struct ComponentLift {
  Graph pattern;
  VertexSubset designated;
};
/// (t-1)H1 -> tH1 for connected H1 by adding a join gadget. t >= 2.
struct CopyStep {
  Graph component;
  std::size_t copies = 0;
};

using ReductionStep = std::variant<StarStep, TwinStarStep, DegreeStrip, RegularCarve, ComponentLift, CopyStep>;

enum class Mechanism { clique_attach, branch_gadget, join_union };

struct ReductionPlan {
  BaseProblem base;
  std::vector<ReductionStep> steps;
  Graph target;
};

class PlanError : public std::invalid_argument {
 public:
  PlanError(const std::string& what, ClassificationResult classification)
      : std::invalid_argument(what), classification_(std::move(classification)) {}
  const ClassificationResult& classification() const noexcept { return classification_; }

 private:
  ClassificationResult classification_;
};

class StepError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline VertexSubset high_degree_vertices(const Graph& h, std::size_t d) {
  VertexSubset out;
  for (Vertex v = 0; v < h.vertex_count(); ++v) {
    if (h.degree(v) > d) out.push_back(v);
  }
  return out;
}

inline bool spans_whole_components(const Graph& h, const VertexSubset& vs) {
  std::vector<bool> in(h.vertex_count(), false);
  for (Vertex v : vs) in[v] = true;
  for (const Edge& e : h.edges()) {
    if (in[e.u] != in[e.v]) return false;
  }
  return true;
}

inline void check_designated(const Graph& h, const VertexSubset& vs) {
  if (vs.empty() || vs.size() >= h.vertex_count()) {
    throw StepError("designated set must be a nonempty proper subset");
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= h.vertex_count() || (i && vs[i] <= vs[i - 1])) {
      throw StepError("designated set must be sorted, distinct and in range");
    }
  }
}

// V' must be exactly the components isomorphic to one largest component.
inline bool lifts_largest_class(const Graph& h, const VertexSubset& vs) {
  const auto comps = components(h);
  std::size_t largest = 0;
  for (const auto& c : comps) largest = std::max(largest, c.size());
  std::vector<bool> in(h.vertex_count(), false);
  for (Vertex v : vs) in[v] = true;
  std::optional<CanonicalForm> form;
  for (const auto& c : comps) {
    if (in[c.front()]) {
      if (c.size() != largest) return false;
      auto f = canonical_form(h.induced(c));
      if (form && f != *form) return false;
      form = std::move(f);
    }
  }
  for (const auto& c : comps) {
    if (!in[c.front()] && c.size() == largest && canonical_form(h.induced(c)) == *form) return false;
  }
  return true;
}

}  // namespace detail

inline Mechanism mechanism(const ReductionStep& step) {
  return std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, StarStep> || std::is_same_v<T, TwinStarStep>) {
          return Mechanism::clique_attach;
        } else if constexpr (std::is_same_v<T, CopyStep>) {
          return Mechanism::join_union;
        } else {
          return Mechanism::branch_gadget;
        }
      },
      step);
}

inline std::string step_name(const ReductionStep& step) {
  static constexpr const char* names[] = {"star",           "twin-star",      "degree-strip",
                                          "regular-carve",  "component-lift", "copy"};
  return names[step.index()];
}

/// Throws StepError unless the step satisfies the hypotheses its gadget relies on.
inline void validate(const ReductionStep& step) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, StarStep>) {
          if (s.leaves < 3) throw StepError("star step needs l >= 3");
        } else if constexpr (std::is_same_v<T, TwinStarStep>) {
          if (s.l1 < 1 || s.l2 < 1 || s.l1 + s.l2 < 3) {
            throw StepError("twin-star step needs l1,l2 >= 1 and l1+l2 >= 3");
          }
        } else if constexpr (std::is_same_v<T, DegreeStrip>) {
          detail::check_designated(s.pattern, detail::high_degree_vertices(s.pattern, s.degree));
        } else if constexpr (std::is_same_v<T, RegularCarve>) {
          detail::check_designated(s.pattern, s.designated);
          auto r = regular_degree(s.pattern);
          if (!is_connected(s.pattern) || !r || *r < 3) {
            throw StepError("regular carve needs a connected r-regular pattern with r >= 3");
          }
          if (s.designated.size() != 3 || !detail::is_carving(s.pattern, s.designated)) {
            throw StepError("regular carve needs a 3-vertex carving set");
          }
        } else if constexpr (std::is_same_v<T, ComponentLift>) {
          detail::check_designated(s.pattern, s.designated);
          if (!detail::spans_whole_components(s.pattern, s.designated)) {
            throw StepError("component lift must designate whole components");
          }
          if (!detail::lifts_largest_class(s.pattern, s.designated)) {
            throw StepError("component lift must designate every copy of one largest component");
          }
        } else if constexpr (std::is_same_v<T, CopyStep>) {
          if (!is_connected(s.component)) throw StepError("copy step needs a connected component");
          if (s.copies < 2) throw StepError("copy step needs t >= 2");
        }
      },
      step);
}

inline Graph source_pattern(const ReductionStep& step) {
  return std::visit(
      [](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, StarStep>) {
          return graphs::star(s.leaves - 1);
        } else if constexpr (std::is_same_v<T, TwinStarStep>) {
          return graphs::twin_star(s.l1 - 1, s.l2 - 1);
        } else if constexpr (std::is_same_v<T, DegreeStrip>) {
          return s.pattern.induced(detail::high_degree_vertices(s.pattern, s.degree));
        } else if constexpr (std::is_same_v<T, CopyStep>) {
          return copies(s.component, s.copies - 1);
        } else {
          return s.pattern.induced(s.designated);
        }
      },
      step);
}

inline Graph target_pattern(const ReductionStep& step) {
  return std::visit(
      [](const auto& s) -> Graph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, StarStep>) {
          return graphs::star(s.leaves);
        } else if constexpr (std::is_same_v<T, TwinStarStep>) {
          return graphs::twin_star(s.l1, s.l2);
        } else if constexpr (std::is_same_v<T, CopyStep>) {
          return copies(s.component, s.copies);
        } else {
          return s.pattern;
        }
      },
      step);
}

/// The pattern spec a branch-gadget step hands to the construction.
inline PatternSpec gadget_spec(const ReductionStep& step) {
  if (auto* s = std::get_if<DegreeStrip>(&step)) {
    return {s->pattern, detail::high_degree_vertices(s->pattern, s->degree)};
  }
  if (auto* s = std::get_if<RegularCarve>(&step)) return {s->pattern, s->designated};
  if (auto* s = std::get_if<ComponentLift>(&step)) return {s->pattern, s->designated};
  throw StepError("step does not use branch gadgets");
}

/// Transforms an instance of the step's source problem into one of its
/// target problem with the same budget.
inline Instance apply_step(const ReductionStep& step, const Instance& inst,
                           GadgetFault fault = GadgetFault::none) {
  if (inst.budget == 0) throw StepError("apply_step needs a positive budget");
  validate(step);
  const std::size_t k = inst.budget;
  switch (mechanism(step)) {
    case Mechanism::clique_attach:
      return {clique_attach(inst.graph, k, fault).graph, k};
    case Mechanism::branch_gadget:
      return {branch_gadget(inst.graph, k, gadget_spec(step), fault).graph, k};
    case Mechanism::join_union: {
      const auto& s = std::get<CopyStep>(step);
      return {disjoint_union({inst.graph, join_gadget(s.component, k, fault)}), k};
    }
  }
  throw std::logic_error("unknown mechanism");
}

/// Checks that the step patterns chain from the base to the target up to
/// isomorphism; returns an empty string or a description of the first break.
inline std::string plan_mismatch(const ReductionPlan& plan) {
  Graph current = plan.base.pattern();
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    try {
      validate(plan.steps[i]);
    } catch (const StepError& e) {
      return "step " + std::to_string(i + 1) + ": " + e.what();
    }
    if (!are_isomorphic(current, source_pattern(plan.steps[i]))) {
      return "step " + std::to_string(i + 1) + " does not start from the previous pattern";
    }
    current = target_pattern(plan.steps[i]);
  }
  if (!are_isomorphic(current, plan.target)) return "chain does not end at the target pattern";
  return {};
}

inline Instance apply_plan(const ReductionPlan& plan, const Instance& base_instance,
                           GadgetFault fault = GadgetFault::none) {
  if (base_instance.budget == 0) throw StepError("apply_plan needs a positive budget");
  if (auto why = plan_mismatch(plan); !why.empty()) throw StepError("inconsistent plan: " + why);
  Instance current = base_instance;
  for (const auto& step : plan.steps) current = apply_step(step, current, fault);
  return current;
}

// ---------------------------------------------------------------------------
// Planning
// ---------------------------------------------------------------------------

namespace detail {

inline ReductionPlan star_chain(std::size_t leaves) {
  ReductionPlan p{BaseProblem::p3_free(), {}, graphs::star(leaves)};
  for (std::size_t l = 3; l <= leaves; ++l) p.steps.emplace_back(StarStep{l});
  return p;
}

// Descend (l1,l2) by (1,1) until (1,1) or a zero coordinate, then climb.
inline ReductionPlan twin_star_chain(std::size_t l1, std::size_t l2) {
  if (l1 > l2) std::swap(l1, l2);
  const std::size_t descents = l1 == l2 ? l1 - 1 : l1;
  ReductionPlan p = l1 == l2 ? ReductionPlan{BaseProblem::p4_free(), {}, graphs::path(4)}
                             : star_chain(l2 - l1 + 1);
  for (std::size_t j = descents; j > 0; --j) {
    p.steps.emplace_back(TwinStarStep{l1 - j + 1, l2 - j + 1});
  }
  p.target = graphs::twin_star(l1, l2);
  return p;
}

inline ReductionPlan plan_connected(const Graph& h, const ConnectedKind& kind) {
  return std::visit(
      [&](const auto& k) -> ReductionPlan {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Star>) {
          auto p = star_chain(k.leaves);
          p.target = h;
          return p;
        } else if constexpr (std::is_same_v<T, TwinStar>) {
          auto p = twin_star_chain(k.l1, k.l2);
          p.target = h;
          return p;
        } else if constexpr (std::is_same_v<T, GeneralTree>) {
          std::vector<Graph> layers{h};
          while (induced_diameter(layers.back()) > 3) layers.push_back(strip_leaves(layers.back()));
          auto core_kind = detail::classify_connected(layers.back());
          auto p = plan_connected(layers.back(), *core_kind);
          for (std::size_t i = layers.size() - 1; i > 0; --i) {
            p.steps.emplace_back(DegreeStrip{layers[i - 1], 1});
          }
          p.target = h;
          return p;
        } else if constexpr (std::is_same_v<T, Cycle>) {
          return {BaseProblem::cycle_free(k.length), {}, h};
        } else {
          static_assert(std::is_same_v<T, RegularHigh>);
          auto carving = choose_regular_carving(h);
          if (!carving) throw std::logic_error("regular pattern without a size-3 carving set");
          auto base = carving->shape == CarvingShape::p3 ? BaseProblem::p3_free()
                                                         : BaseProblem::cycle_free(3);
          return {base, {RegularCarve{h, carving->vertices}}, h};
        }
      },
      kind);
}

}  // namespace detail

/// Builds the reduction chain for h from one of the base problems.
inline ReductionPlan plan(const Graph& h) {
  auto cls = classify(h);
  if (!cls.supported()) {
    throw PlanError("no reduction chain for class " + kind_name(cls.kind), cls);
  }
  if (auto* k = std::get_if<MatchingUnion>(&cls.kind)) {
    ReductionPlan p{BaseProblem::two_k2_free(), {}, h};
    for (std::size_t s = 3; s <= k->edges; ++s) p.steps.emplace_back(CopyStep{graphs::complete(2), s});
    if (k->isolated > 0) p.steps.emplace_back(ComponentLift{h, *cls.witness});
    return p;
  }
  if (auto* k = std::get_if<CompositeLargest>(&cls.kind)) {
    ReductionPlan p = detail::plan_connected(k->component, k->inner);
    for (std::size_t s = 2; s <= k->copies; ++s) p.steps.emplace_back(CopyStep{k->component, s});
    if (!k->leftover.empty()) p.steps.emplace_back(ComponentLift{h, *cls.witness});
    p.target = h;
    return p;
  }
  ConnectedKind connected = std::visit(
      [](const auto& k) -> ConnectedKind {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_constructible_v<ConnectedKind, T>) {
          return k;
        } else {
          throw std::logic_error("unexpected pattern class");
        }
      },
      cls.kind);
  return detail::plan_connected(h, connected);
}

/// H-free Edge Completion on (G,k) is H̄-free Edge Deletion on (Ḡ,k).
inline std::pair<Graph, Instance> to_completion(const Graph& h, const Instance& inst) {
  return {complement(h), Instance{complement(inst.graph), inst.budget}};
}

// ---------------------------------------------------------------------------
// Plan text format
// ---------------------------------------------------------------------------

class PlanFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string compact_graph(const Graph& g) {
  return std::to_string(g.vertex_count()) + " " + format_edge_list(g.edges());
}

inline std::string base_line(const BaseProblem& b) {
  switch (b.kind) {
    case BaseProblem::Kind::p3_free: return "base p3-free";
    case BaseProblem::Kind::p4_free: return "base p4-free";
    case BaseProblem::Kind::cycle_free: return "base cycle-free " + std::to_string(b.cycle_length);
    case BaseProblem::Kind::two_k2_free: return "base 2k2-free";
  }
  return "base ?";
}

inline std::string step_line(const ReductionStep& step) {
  return "step " + step_name(step) + " " +
         std::visit(
             [](const auto& s) -> std::string {
               using T = std::decay_t<decltype(s)>;
               if constexpr (std::is_same_v<T, StarStep>) {
                 return std::to_string(s.leaves);
               } else if constexpr (std::is_same_v<T, TwinStarStep>) {
                 return std::to_string(s.l1) + " " + std::to_string(s.l2);
               } else if constexpr (std::is_same_v<T, DegreeStrip>) {
                 return std::to_string(s.degree) + " " + compact_graph(s.pattern);
               } else if constexpr (std::is_same_v<T, CopyStep>) {
                 return std::to_string(s.copies) + " " + compact_graph(s.component);
               } else {
                 return compact_graph(s.pattern) + " " + format_vertex_list(s.designated);
               }
             },
             step);
}

inline std::size_t parse_count(std::string_view token, const std::string& line) {
  auto v = to_size(token);
  if (!v) throw PlanFormatError("bad number '" + std::string(token) + "' in: " + line);
  return *v;
}

inline std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

inline Graph parse_compact_graph(std::string_view n_token, std::string_view edges_token,
                                 const std::string& line) {
  const std::size_t n = parse_count(n_token, line);
  Graph g(n);
  if (edges_token == "-") return g;
  for (auto item : split_on(edges_token, ',')) {
    auto ends = split_on(item, '-');
    if (ends.size() != 2) throw PlanFormatError("bad edge '" + std::string(item) + "' in: " + line);
    const std::size_t a = parse_count(ends[0], line);
    const std::size_t b = parse_count(ends[1], line);
    if (a < 1 || b < 1 || a > n || b > n || a == b || !g.add_edge(a - 1, b - 1)) {
      throw PlanFormatError("invalid edge '" + std::string(item) + "' in: " + line);
    }
  }
  return g;
}

inline VertexSubset parse_vertex_list(std::string_view token, std::size_t n, const std::string& line) {
  VertexSubset out;
  if (token == "-") return out;
  for (auto item : split_on(token, ',')) {
    const std::size_t v = parse_count(item, line);
    if (v < 1 || v > n) throw PlanFormatError("vertex out of range in: " + line);
    out.push_back(v - 1);
  }
  normalize(out);
  return out;
}

}  // namespace detail

/// `base ...`, one `step ...` line per step, then `target <n> <m>` and the
/// target's `e u v` lines.
inline std::string format_plan(const ReductionPlan& p) {
  std::ostringstream out;
  out << detail::base_line(p.base) << '\n';
  for (const auto& s : p.steps) out << detail::step_line(s) << '\n';
  out << "target " << p.target.vertex_count() << ' ' << p.target.edge_count() << '\n';
  for (const Edge& e : p.target.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

inline ReductionPlan parse_plan(std::string_view text) {
  ReductionPlan p;
  bool have_base = false;
  bool have_target = false;
  std::size_t target_m = 0;
  for (auto raw : detail::split_on(text, '\n')) {
    const std::string line(raw);
    auto t = detail::split_ws(raw);
    if (t.empty() || t[0].starts_with('#')) continue;
    if (!have_base) {
      if (t[0] != "base" || t.size() < 2) throw PlanFormatError("plan must start with a base line");
      if (t[1] == "p3-free" && t.size() == 2) {
        p.base = BaseProblem::p3_free();
      } else if (t[1] == "p4-free" && t.size() == 2) {
        p.base = BaseProblem::p4_free();
      } else if (t[1] == "2k2-free" && t.size() == 2) {
        p.base = BaseProblem::two_k2_free();
      } else if (t[1] == "cycle-free" && t.size() == 3) {
        const std::size_t len = detail::parse_count(t[2], line);
        if (len < 3) throw PlanFormatError("cycle base needs length >= 3");
        p.base = BaseProblem::cycle_free(len);
      } else {
        throw PlanFormatError("unknown base: " + line);
      }
      have_base = true;
      continue;
    }
    if (have_target) {
      if (t[0] != "e" || t.size() != 3) throw PlanFormatError("expected target edge: " + line);
      const std::size_t n = p.target.vertex_count();
      const std::size_t a = detail::parse_count(t[1], line);
      const std::size_t b = detail::parse_count(t[2], line);
      if (a < 1 || b < 1 || a > n || b > n || a == b || !p.target.add_edge(a - 1, b - 1)) {
        throw PlanFormatError("invalid target edge: " + line);
      }
      continue;
    }
    if (t[0] == "target") {
      if (t.size() != 3) throw PlanFormatError("bad target line: " + line);
      p.target = Graph(detail::parse_count(t[1], line));
      target_m = detail::parse_count(t[2], line);
      have_target = true;
      continue;
    }
    if (t[0] != "step" || t.size() < 3) throw PlanFormatError("expected step line: " + line);
    const auto kind = t[1];
    if (kind == "star" && t.size() == 3) {
      p.steps.emplace_back(StarStep{detail::parse_count(t[2], line)});
    } else if (kind == "twin-star" && t.size() == 4) {
      p.steps.emplace_back(TwinStarStep{detail::parse_count(t[2], line), detail::parse_count(t[3], line)});
    } else if (kind == "degree-strip" && t.size() == 5) {
      p.steps.emplace_back(DegreeStrip{detail::parse_compact_graph(t[3], t[4], line),
                                       detail::parse_count(t[2], line)});
    } else if (kind == "copy" && t.size() == 5) {
      p.steps.emplace_back(CopyStep{detail::parse_compact_graph(t[3], t[4], line),
                                    detail::parse_count(t[2], line)});
    } else if ((kind == "regular-carve" || kind == "component-lift") && t.size() == 5) {
      Graph g = detail::parse_compact_graph(t[2], t[3], line);
      VertexSubset vs = detail::parse_vertex_list(t[4], g.vertex_count(), line);
      if (kind == "regular-carve") {
        p.steps.emplace_back(RegularCarve{std::move(g), std::move(vs)});
      } else {
        p.steps.emplace_back(ComponentLift{std::move(g), std::move(vs)});
      }
    } else {
      throw PlanFormatError("unknown step: " + line);
    }
  }
  if (!have_base || !have_target) throw PlanFormatError("plan needs a base line and a target line");
  if (p.target.edge_count() != target_m) throw PlanFormatError("target edge count mismatch");
  for (const auto& s : p.steps) {
    try {
      validate(s);
    } catch (const StepError& e) {
      throw PlanFormatError(std::string("invalid step: ") + e.what());
    }
  }
  return p;
}

}  // namespace hfree
