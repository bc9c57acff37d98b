#include <gtest/gtest.h>

#include <random>

#include "hfree/generate.hpp"
#include "hfree/io.hpp"
#include "hfree/named_graphs.hpp"
#include "hfree/planner.hpp"
#include "hfree/solver.hpp"
#include "hfree/verifier.hpp"
#include "oracles.hpp"

using namespace hfree;

namespace {

std::vector<std::string> step_names(const ReductionPlan& p) {
  std::vector<std::string> out;
  for (const auto& s : p.steps) out.push_back(detail::step_line(s));
  return out;
}

}  // namespace

TEST(Plan, StarChain) {
  auto p = plan(graphs::star(4));
  EXPECT_EQ(p.base, BaseProblem::p3_free());
  EXPECT_EQ(step_names(p), (std::vector<std::string>{"step star 3", "step star 4"}));
  EXPECT_TRUE(plan(graphs::path(3)).steps.empty());
}

TEST(Plan, TwinStarChains) {
  auto p = plan(graphs::twin_star(2, 2));
  EXPECT_EQ(p.base, BaseProblem::p4_free());
  EXPECT_EQ(step_names(p), (std::vector<std::string>{"step twin-star 2 2"}));

  // (1,3) descends once to (0,2) = S3, built from P3
  p = plan(graphs::twin_star(1, 3));
  EXPECT_EQ(p.base, BaseProblem::p3_free());
  EXPECT_EQ(step_names(p), (std::vector<std::string>{"step star 3", "step twin-star 1 3"}));

  p = plan(graphs::twin_star(1, 1));
  EXPECT_EQ(p.base, BaseProblem::p4_free());
  EXPECT_TRUE(p.steps.empty());

  p = plan(graphs::twin_star(3, 3));
  EXPECT_EQ(step_names(p), (std::vector<std::string>{"step twin-star 2 2", "step twin-star 3 3"}));

  p = plan(graphs::twin_star(2, 4));
  EXPECT_EQ(p.base, BaseProblem::p3_free());
  EXPECT_EQ(step_names(p),
            (std::vector<std::string>{"step star 3", "step twin-star 1 3", "step twin-star 2 4"}));
}

TEST(Plan, TreeChainStripsOutward) {
  auto p = plan(graphs::path(7));  // P7 -> P5 -> P3
  EXPECT_EQ(p.base, BaseProblem::p3_free());
  ASSERT_EQ(p.steps.size(), 2u);
  EXPECT_EQ(std::get<DegreeStrip>(p.steps[0]).pattern.vertex_count(), 5u);
  EXPECT_EQ(std::get<DegreeStrip>(p.steps[1]).pattern.vertex_count(), 7u);
  EXPECT_EQ(plan_mismatch(p), "");
}

TEST(Plan, OtherKinds) {
  auto c = plan(graphs::cycle(5));
  EXPECT_EQ(c.base, BaseProblem::cycle_free(5));
  EXPECT_TRUE(c.steps.empty());

  auto k4 = plan(graphs::complete(4));
  EXPECT_EQ(k4.base, BaseProblem::cycle_free(3));
  ASSERT_EQ(k4.steps.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<RegularCarve>(k4.steps[0]));

  auto pet = plan(graphs::petersen());
  EXPECT_EQ(pet.base, BaseProblem::p3_free());

  auto m = plan(disjoint_union({graphs::matching(2), graphs::empty(1)}));
  EXPECT_EQ(m.base, BaseProblem::two_k2_free());
  ASSERT_EQ(m.steps.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<ComponentLift>(m.steps[0]));

  auto m3 = plan(graphs::matching(3));
  ASSERT_EQ(m3.steps.size(), 1u);
  EXPECT_EQ(std::get<CopyStep>(m3.steps[0]).copies, 3u);

  auto comp = plan(disjoint_union({graphs::complete(3), graphs::complete(2)}));
  EXPECT_EQ(comp.base, BaseProblem::cycle_free(3));
  ASSERT_EQ(comp.steps.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<ComponentLift>(comp.steps[0]));

  auto two_p3 = plan(copies(graphs::path(3), 2));
  ASSERT_EQ(two_p3.steps.size(), 1u);
  EXPECT_EQ(std::get<CopyStep>(two_p3.steps[0]).copies, 2u);
}

TEST(Plan, RejectsUnsupportedWithClassification) {
  try {
    plan(graphs::paw());
    FAIL();
  } catch (const PlanError& e) {
    EXPECT_TRUE(e.classification().is<Unsupported>());
  }
  try {
    plan(graphs::complete(2));
    FAIL();
  } catch (const PlanError& e) {
    EXPECT_TRUE(e.classification().is<PolynomialTime>());
  }
}

TEST(Plan, SoundOnEverySupportedSmallPattern) {
  std::size_t planned = 0;
  for (const Graph& h : nonisomorphic_graphs_up_to(7)) {
    if (!classify(h).supported()) continue;
    auto p = plan(h);
    EXPECT_EQ(plan_mismatch(p), "") << write_graph(h);
    EXPECT_EQ(p.target, h);
    ++planned;
  }
  EXPECT_GT(planned, 100u);
}

TEST(Plan, SoundOnCatalog) {
  for (const Graph& h : acceptance_catalog()) EXPECT_EQ(plan_mismatch(plan(h)), "");
}

TEST(Plan, TextRoundTrip) {
  for (const Graph& h : acceptance_catalog()) {
    auto p = plan(h);
    const std::string text = format_plan(p);
    EXPECT_EQ(format_plan(parse_plan(text)), text);
  }
  EXPECT_EQ(format_plan(plan(graphs::star(4))),
            "base p3-free\nstep star 3\nstep star 4\ntarget 5 4\ne 1 2\ne 1 3\ne 1 4\ne 1 5\n");
}

TEST(Plan, ParseErrors) {
  EXPECT_THROW(parse_plan(""), PlanFormatError);
  EXPECT_THROW(parse_plan("step star 3\n"), PlanFormatError);
  EXPECT_THROW(parse_plan("base p5-free\ntarget 1 0\n"), PlanFormatError);
  EXPECT_THROW(parse_plan("base cycle-free 2\ntarget 1 0\n"), PlanFormatError);
  EXPECT_THROW(parse_plan("base p3-free\nstep star 2\ntarget 3 0\n"), PlanFormatError);
  EXPECT_THROW(parse_plan("base p3-free\nstep star x\ntarget 3 0\n"), PlanFormatError);
  EXPECT_THROW(parse_plan("base p3-free\ntarget 3 1\n"), PlanFormatError);
  EXPECT_THROW(parse_plan("base p3-free\ntarget 3 1\ne 1 4\n"), PlanFormatError);
  EXPECT_THROW(parse_plan("base p3-free\nstep regular-carve 4 1-2 1,2,3\ntarget 4 1\ne 1 2\n"), PlanFormatError);
  EXPECT_THROW(parse_plan("base p3-free\nstep copy 2 2 1-3\ntarget 4 2\ne 1 2\ne 3 4\n"), PlanFormatError);
  EXPECT_NO_THROW(parse_plan("# comment\nbase 2k2-free\nstep copy 3 2 1-2\ntarget 6 3\ne 1 2\ne 3 4\ne 5 6\n"));
}

TEST(Step, Validation) {
  EXPECT_THROW(validate(StarStep{2}), StepError);
  EXPECT_THROW(validate(TwinStarStep{1, 1}), StepError);
  EXPECT_THROW(validate(TwinStarStep{0, 3}), StepError);
  EXPECT_NO_THROW(validate(TwinStarStep{2, 1}));
  EXPECT_THROW(validate(DegreeStrip{graphs::path(5), 5}), StepError);
  EXPECT_THROW(validate(RegularCarve{graphs::complete(4), {0, 1}}), StepError);
  EXPECT_THROW(validate(RegularCarve{graphs::cycle(5), {0, 1, 2}}), StepError);
  // in the 3-cube, a vertex with two neighbours on one face leaves the rest connected; an
  // independent-looking choice does not induce a connected set
  EXPECT_THROW(validate(RegularCarve{graphs::petersen(), {0, 2, 4}}), StepError);
  EXPECT_NO_THROW(validate(RegularCarve{graphs::petersen(), {0, 1, 2}}));
  const Graph k3k2 = disjoint_union({graphs::complete(3), graphs::complete(2)});
  EXPECT_THROW(validate(ComponentLift{k3k2, {3, 4}}), StepError);  // not a largest component
  EXPECT_THROW(validate(ComponentLift{k3k2, {0, 1}}), StepError);  // not whole
  const Graph p3p3k1 = disjoint_union({graphs::path(3), graphs::path(3), graphs::empty(1)});
  EXPECT_THROW(validate(ComponentLift{p3p3k1, {0, 1, 2}}), StepError);  // misses one copy
  EXPECT_NO_THROW(validate(ComponentLift{p3p3k1, {0, 1, 2, 3, 4, 5}}));
  EXPECT_THROW(validate(CopyStep{graphs::matching(2), 2}), StepError);
  EXPECT_THROW(validate(CopyStep{graphs::complete(2), 1}), StepError);
}

TEST(Step, Patterns) {
  EXPECT_EQ(source_pattern(StarStep{3}), graphs::star(2));
  EXPECT_EQ(target_pattern(TwinStarStep{2, 2}), graphs::twin_star(2, 2));
  EXPECT_TRUE(are_isomorphic(source_pattern(DegreeStrip{graphs::path(5), 1}), graphs::path(3)));
  EXPECT_EQ(source_pattern(CopyStep{graphs::complete(2), 3}), graphs::matching(2));
  EXPECT_EQ(mechanism(StarStep{3}), Mechanism::clique_attach);
  EXPECT_EQ(mechanism(CopyStep{graphs::complete(2), 2}), Mechanism::join_union);
  EXPECT_EQ(mechanism(DegreeStrip{graphs::path(5), 1}), Mechanism::branch_gadget);
}

TEST(ApplyStep, Examples) {
  auto star = apply_step(StarStep{3}, {graphs::path(4), 1});
  EXPECT_EQ(star.graph.vertex_count(), 12u);
  EXPECT_EQ(star.budget, 1u);
  EXPECT_EQ(star.graph, clique_attach(graphs::path(4), 1).graph);

  auto copy = apply_step(CopyStep{graphs::complete(2), 2}, {graphs::cycle(4), 1});
  EXPECT_EQ(copy.graph, disjoint_union({graphs::cycle(4), graphs::complete(4)}));
  EXPECT_EQ(copy.budget, 1u);

  const Instance base{graphs::cycle(5), 2};
  auto strip = apply_step(DegreeStrip{graphs::path(5), 1}, base);
  EXPECT_EQ(strip.graph, branch_gadget(base.graph, 2, {graphs::path(5), {1, 2, 3}}).graph);

  EXPECT_THROW(apply_step(StarStep{3}, {graphs::path(4), 0}), StepError);
  EXPECT_THROW(apply_step(StarStep{2}, {graphs::path(4), 1}), StepError);
}

TEST(ApplyPlan, Examples) {
  auto s3 = apply_plan(plan(graphs::star(3)), {graphs::path(4), 1});
  EXPECT_EQ(s3.graph.vertex_count(), 12u);

  const Instance c{graphs::path(5), 2};
  EXPECT_EQ(apply_plan(plan(graphs::cycle(6)), c), c);

  auto s4 = apply_plan(plan(graphs::star(4)), {graphs::path(4), 1});
  EXPECT_EQ(s4.graph.vertex_count(), 36u);
  EXPECT_EQ(s4.graph, clique_attach(clique_attach(graphs::path(4), 1).graph, 1).graph);

  EXPECT_THROW(apply_plan(plan(graphs::star(3)), {graphs::path(4), 0}), StepError);
  ReductionPlan broken = plan(graphs::star(4));
  broken.steps.erase(broken.steps.begin());
  EXPECT_THROW(apply_plan(broken, {graphs::path(4), 1}), StepError);
}

TEST(ApplyPlan, BudgetPreservedAcrossCatalog) {
  std::mt19937_64 rng(71);
  for (const Graph& h : acceptance_catalog()) {
    auto p = plan(h);
    for (std::size_t k = 1; k <= 2; ++k) {
      Instance inst{oracle::random_graph(rng, 3, 0.6), k};
      for (const auto& s : p.steps) {
        inst = apply_step(s, inst);
        EXPECT_EQ(inst.budget, k);
      }
    }
  }
}

TEST(ApplyStep, SmallHostsEquivalentByIndependentOracle) {
  // star step on hosts up to 4 vertices, with the target decided by the matcher-free oracle where it is small
  for (const Graph& g : nonisomorphic_graphs_up_to(3)) {
    const Instance inst{g, 1};
    const Instance out = apply_step(StarStep{3}, inst);
    EXPECT_EQ(oracle::solvable(inst, graphs::path(3)), solve_branching(out, graphs::star(3)).has_value());
  }
}

TEST(Completion, Examples) {
  auto [h, inst] = to_completion(graphs::complete(3), {graphs::path(3), 1});
  EXPECT_EQ(h, graphs::empty(3));
  EXPECT_EQ(inst.graph, complement(graphs::path(3)));
  EXPECT_EQ(inst.budget, 1u);
  auto [h2, inst2] = to_completion(h, inst);
  EXPECT_EQ(h2, graphs::complete(3));
  EXPECT_EQ(inst2.graph, graphs::path(3));
  EXPECT_TRUE(are_isomorphic(to_completion(graphs::cycle(5), {graphs::path(3), 1}).first, graphs::cycle(5)));
}

TEST(Completion, MatchesAddingEdges) {
  // completing G to be H-free with <= k additions == deleting in the complement
  std::mt19937_64 rng(72);
  const Graph h = graphs::matching(2);  // complement is C4
  for (int i = 0; i < 40; ++i) {
    Graph g = oracle::random_graph(rng, 2 + rng() % 4, 0.5);
    const std::size_t k = rng() % 3;
    bool by_adding = false;
    const Graph comp = complement(g);
    const auto missing = comp.edges();
    for (std::uint32_t mask = 0; mask < (1U << missing.size()) && !by_adding; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) > k) continue;
      Graph added = g;
      for (std::size_t j = 0; j < missing.size(); ++j) {
        if ((mask >> j) & 1U) added.add_edge(missing[j].u, missing[j].v);
      }
      by_adding = oracle::is_free(added, h);
    }
    auto [hc, ic] = to_completion(h, {g, k});
    EXPECT_EQ(by_adding, solve_bruteforce(ic, hc).has_value());
  }
}
