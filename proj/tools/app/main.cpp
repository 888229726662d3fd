#include "symred/cli/commands.hpp"
#include "symred/errors.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace symred;
using namespace symred::cli;

int main(int argc, char** argv) {
  CLI::App app{"Symmetry-reduced optimal control of multi-agent systems on SE(2)"};
  app.require_subcommand(1);

  SimulateOptions sim;
  std::string gamma_mode;
  std::string integrator;
  std::string formulation;
  bool paper_gamma = false;
  bool no_plots = false;
  auto* simulate = app.add_subcommand("simulate", "Integrate a scenario and write its trajectory");
  simulate->add_option("--scenario", sim.scenario, "Preset name or JSON config path")
      ->capture_default_str();
  simulate->add_option("--gamma-mode", gamma_mode, "Coupling force: oracle or paper")
      ->check(CLI::IsMember({"oracle", "paper"}));
  simulate->add_flag("--paper-gamma", paper_gamma, "Same as --gamma-mode paper");
  simulate->add_option("--integrator", integrator, "euler-matrix, lie-euler or rk4")
      ->check(CLI::IsMember({"euler-matrix", "lie-euler", "rk4"}));
  simulate->add_option("--formulation", formulation, "lagrangian or hamiltonian")
      ->check(CLI::IsMember({"lagrangian", "hamiltonian"}));
  simulate->add_option("--out", sim.output_dir, "Output directory");
  simulate->add_option("--stride", sim.stride, "Record every k-th step")->check(CLI::PositiveNumber);
  simulate->add_option("--steps", sim.steps, "Number of steps")->check(CLI::PositiveNumber);
  simulate->add_option("--step", sim.step, "Step size")->check(CLI::PositiveNumber);
  simulate->add_flag("--json", sim.json, "Also write trajectory.json");
  simulate->add_flag("--no-plots", no_plots, "Skip the SVG plots");

  std::string level = "quick";
  std::uint64_t seed = 20240601;
  auto* check = app.add_subcommand("check", "Run the invariant suites");
  check->add_option("--level", level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}))
      ->capture_default_str();
  check->add_option("--seed", seed, "Seed for the randomized suites")->capture_default_str();

  std::string csv_path;
  std::string kind = "xy";
  std::string svg_path;
  auto* plot = app.add_subcommand("plot", "Render an SVG from a trajectory CSV");
  plot->add_option("trajectory", csv_path, "Trajectory CSV")->required();
  plot->add_option("--kind", kind, "xy, attitude or controls")
      ->check(CLI::IsMember({"xy", "attitude", "controls"}))
      ->capture_default_str();
  plot->add_option("--out", svg_path, "Output SVG path (default <kind>.svg)");

  auto* dump = app.add_subcommand("dump-algebra", "Print the se(2) basis and structure constants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : exit_code::config;
  }

  try {
    if (*simulate) {
      if (!gamma_mode.empty()) sim.gamma_mode = parse_gamma_mode(gamma_mode);
      if (paper_gamma) sim.gamma_mode = GammaMode::paper;
      if (!integrator.empty()) sim.method = parse_method(integrator);
      if (!formulation.empty()) sim.formulation = parse_formulation(formulation);
      sim.plots = !no_plots;
      return cmd_simulate(sim, std::cout, std::cerr);
    }
    if (*check) return cmd_check(parse_check_level(level), seed, std::cout);
    if (*plot) {
      const PlotKind k = parse_plot_kind(kind);
      return cmd_plot(csv_path, k, svg_path.empty() ? kind + ".svg" : svg_path, std::cerr);
    }
    if (*dump) return cmd_dump_algebra(std::cout);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code::config;
  }
  return 0;
}
