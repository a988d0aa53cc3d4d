// Command-line front end: evaluate serial-line performance under EB/IB flow
// control by decomposition, simulation, or exact chain analysis.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ebline/cli.hpp"

namespace {

int run(int (*cmd)(const ebline::CliOptions&, std::ostream&, std::ostream&),
        const ebline::CliOptions& opts, const std::string& out_path) {
  if (out_path.empty()) return cmd(opts, std::cout, std::cerr);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return ebline::kInputError;
  }
  return cmd(opts, out, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state performance of serial production lines under "
               "echelon-buffer (EB), installation-buffer (IB) and CONWIP control"};
  app.require_subcommand(1);

  ebline::CliOptions opts;
  std::string out_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--spec", opts.spec_path, "line spec file (JSON)")->required();
    sub->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", out_path, "write the report to this path instead of stdout");
    sub->add_option("--epsilon", opts.epsilon, "override convergence tolerance");
    sub->add_option("--seed", opts.seed, "override simulation base seed");
    sub->add_option("--replications", opts.replications, "override simulation replications");
    sub->add_option("--horizon", opts.horizon, "override simulation horizon (periods)");
  };

  CLI::App* decompose = app.add_subcommand("decompose", "fixed-point decomposition (EB only)");
  add_common(decompose);
  CLI::App* simulate = app.add_subcommand("simulate", "replicated time-driven simulation");
  add_common(simulate);
  CLI::App* exact = app.add_subcommand("exact", "exact Markov-chain analysis (small lines)");
  add_common(exact);
  exact->add_option("--state-cap", opts.exact_cap, "refuse chains above this many states")
      ->capture_default_str();
  CLI::App* compare = app.add_subcommand("compare", "decomposition vs EB/IB simulation");
  add_common(compare);
  compare->add_flag("--with-exact", opts.with_exact, "add an exact-chain column when feasible");
  compare->add_option("--state-cap", opts.exact_cap, "state cap for the exact column")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (decompose->parsed()) return run(ebline::cmd_decompose, opts, out_path);
  if (simulate->parsed()) return run(ebline::cmd_simulate, opts, out_path);
  if (exact->parsed()) return run(ebline::cmd_exact, opts, out_path);
  return run(ebline::cmd_compare, opts, out_path);
}
