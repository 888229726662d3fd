#pragma once

// Subcommand bodies, kept separate from argument parsing so tests can call
// them directly with string streams.

#include "symred/cli/checks.hpp"
#include "symred/cli/scenario.hpp"
#include "symred/cli/svg_plot.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace symred::cli {

namespace exit_code {
constexpr int ok = 0;
constexpr int config = 1;
constexpr int collision = 2;
constexpr int numerical = 3;
}  // namespace exit_code

struct SimulateOptions {
  std::string scenario = "paper-unicycles";
  std::optional<GammaMode> gamma_mode;
  std::optional<Method> method;
  std::optional<Formulation> formulation;
  std::optional<std::string> output_dir;
  std::optional<std::size_t> stride;
  std::optional<std::size_t> steps;
  std::optional<double> step;
  bool json = false;
  bool plots = true;
};

/// Applies the command-line overrides on top of a loaded scenario.
ScenarioConfig apply_overrides(ScenarioConfig config, const SimulateOptions& options);

/// Writes trajectory.csv (plus trajectory.json and xy/attitude/controls SVGs
/// when enabled) into the output directory and prints a summary.
/// Returns one of the exit_code values.
int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);

/// Prints one PASS/FAIL line per check; returns 1 if any failed.
int cmd_check(CheckLevel level, std::uint64_t seed, std::ostream& out,
              const CheckHooks& hooks = {});

/// Renders one plot from a trajectory CSV. Returns 1 on unreadable input.
int cmd_plot(const std::string& csv_path, PlotKind kind, const std::string& svg_path,
             std::ostream& err);

int cmd_dump_algebra(std::ostream& out);

}  // namespace symred::cli
