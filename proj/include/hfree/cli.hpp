#pragma once

#include <algorithm>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hfree/io.hpp"
#include "hfree/pattern_analysis.hpp"
#include "hfree/planner.hpp"
#include "hfree/solver.hpp"
#include "hfree/verifier.hpp"

namespace hfree::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

namespace detail {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline Graph read_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline Instance read_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file || !(file << text)) throw InputError("cannot write " + out_path);
}

struct Flags {
  std::string pattern, instance, plan, out, suite;
  std::optional<std::size_t> n, k;
  std::uint64_t seed = 1;
  std::size_t count = 100;
};

inline SweepOptions suite_options(const Flags& f, bool random) {
  SweepOptions opt;
  if (f.suite == "regular-carve" || f.suite == "catalog") {
    opt.max_vertices = 4;
    opt.max_budget = 1;
  }
  if (f.suite == "solver-agreement") {
    opt.min_budget = 0;
    opt.max_budget = 3;
  }
  if (f.n) opt.max_vertices = *f.n;
  if (f.k) opt.max_budget = *f.k;
  opt.min_budget = std::min(opt.min_budget, opt.max_budget);
  opt.seed = f.seed;
  opt.count = f.suite == "gadget-structure" && !random ? 50 : f.count;
  if (random) opt.mode = SweepOptions::Mode::random;
  return opt;
}

inline int run_suite_command(const Flags& f, bool random, std::ostream& out) {
  if (random && (f.suite == "solver-agreement" || f.suite == "gadget-structure")) {
    throw CLI::ValidationError("--suite", "fuzz needs a step or catalog suite");
  }
  bool ok = true;
  for (const auto& r : run_suite(f.suite, suite_options(f, random))) {
    out << format_report(r);
    ok = ok && r.ok();
  }
  return ok ? exit_ok : exit_failure;
}

}  // namespace detail

/// Runs one command; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"H-free edge deletion reductions"};
  app.require_subcommand(1, 1);
  detail::Flags f;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a forbidden pattern");
  classify_cmd->add_option("--pattern", f.pattern, "Pattern graph file")->required();

  auto* plan_cmd = app.add_subcommand("plan", "Print the reduction chain for a pattern");
  plan_cmd->add_option("--pattern", f.pattern, "Pattern graph file")->required();
  plan_cmd->add_option("--out", f.out, "Write the plan here instead of stdout");

  auto* reduce_cmd = app.add_subcommand("reduce", "Apply a plan to a base-problem instance");
  reduce_cmd->add_option("--plan", f.plan, "Plan file")->required();
  reduce_cmd->add_option("--instance", f.instance, "Base instance file")->required();
  reduce_cmd->add_option("--out", f.out, "Write the reduced instance here instead of stdout");

  auto* solve_cmd = app.add_subcommand("solve", "Decide an H-free Edge Deletion instance");
  solve_cmd->add_option("--instance", f.instance, "Instance file")->required();
  solve_cmd->add_option("--pattern", f.pattern, "Pattern graph file")->required();

  const std::vector<std::string>& names = suite_names();
  auto* verify_cmd = app.add_subcommand("verify", "Run a named verification suite");
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Run a suite on random hosts");
  for (auto* cmd : {verify_cmd, fuzz_cmd}) {
    cmd->add_option("--suite", f.suite, "Suite name")->required()->check(CLI::IsMember(names));
    cmd->add_option("--n", f.n, "Largest host vertex count");
    cmd->add_option("--k", f.k, "Largest budget");
    cmd->add_option("--seed", f.seed, "Random seed");
    cmd->add_option("--count", f.count, "Number of random cases");
  }

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*classify_cmd) {
      out << format_classification(classify(detail::read_graph(f.pattern))) << '\n';
    } else if (*plan_cmd) {
      const Graph h = detail::read_graph(f.pattern);
      try {
        detail::emit(format_plan(plan(h)), f.out, out);
      } catch (const PlanError& e) {
        err << "error: " << e.what() << ": " << format_classification(e.classification()) << '\n';
        return exit_failure;
      }
    } else if (*reduce_cmd) {
      ReductionPlan p;
      try {
        p = parse_plan(detail::read_file(f.plan));
      } catch (const PlanFormatError& e) {
        throw detail::InputError(f.plan + ": " + e.what());
      }
      const Instance base = detail::read_instance(f.instance);
      detail::emit(write_instance(apply_plan(p, base)), f.out, out);
    } else if (*solve_cmd) {
      const Instance inst = detail::read_instance(f.instance);
      out << format_solution(solve_branching(inst, detail::read_graph(f.pattern))) << '\n';
    } else if (*verify_cmd) {
      return detail::run_suite_command(f, false, out);
    } else if (*fuzz_cmd) {
      return detail::run_suite_command(f, true, out);
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: usage: " << e.what() << '\n';
    return exit_usage;
  } catch (const CapacityError& e) {
    err << "error: capacity: " << e.what() << '\n';
    return exit_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_ok;
}

}  // namespace hfree::cli
