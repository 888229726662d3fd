#include "symred/cli/commands.hpp"

#include "symred/cli/trajectory_io.hpp"
#include "symred/errors.hpp"
#include "symred/se2.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>

namespace symred::cli {

namespace fs = std::filesystem;

namespace {

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("output", "cannot write '" + path.string() + "'");
  f << content;
  if (!f) throw ConfigError("output", "failed writing '" + path.string() + "'");
}

std::string matrix_rows(const Eigen::Matrix3d& m) {
  std::string s;
  char buf[64];
  for (int r = 0; r < 3; ++r) {
    s += "  [";
    for (int c = 0; c < 3; ++c) {
      std::snprintf(buf, sizeof buf, "%s%6.3g", c ? " " : "", m(r, c) == 0.0 ? 0.0 : m(r, c));
      s += buf;
    }
    s += " ]\n";
  }
  return s;
}

std::string basis_name(Index k) { return "e" + std::to_string(k + 1); }

std::string combination(const AlgebraVector& v) {
  std::string s;
  for (Index k = 0; k < v.size(); ++k) {
    if (v[k] == 0.0) continue;
    if (!s.empty()) s += v[k] > 0 ? " + " : " - ";
    else if (v[k] < 0) s += "-";
    if (std::abs(v[k]) != 1.0) s += format_number(std::abs(v[k])) + " ";
    s += basis_name(k);
  }
  return s.empty() ? "0" : s;
}

}  // namespace

ScenarioConfig apply_overrides(ScenarioConfig config, const SimulateOptions& options) {
  if (options.gamma_mode) config.gamma_mode = *options.gamma_mode;
  if (options.method) config.integrator.method = *options.method;
  if (options.formulation) config.formulation = *options.formulation;
  if (options.output_dir) config.output_dir = *options.output_dir;
  if (options.stride) config.stride = *options.stride;
  if (options.steps) config.integrator.steps = *options.steps;
  if (options.step) config.integrator.step = *options.step;
  if (options.json) config.write_json = true;
  if (config.stride < 1) throw ConfigError("stride", "must be at least 1");
  if (config.integrator.steps < 1) throw ConfigError("integrator.steps", "must be at least 1");
  if (!(config.integrator.step > 0.0) || !std::isfinite(config.integrator.step)) {
    throw ConfigError("integrator.step", "must be positive");
  }
  return config;
}

int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
  ScenarioConfig config;
  std::optional<ReducedSystem> system;
  MultiAgentState initial;
  try {
    config = apply_overrides(resolve_scenario(options.scenario), options);
    system.emplace(build_system(config));
    initial = initial_state(config, *system);
  } catch (const Error& e) {
    err << "config error: " << e.what() << '\n';
    return exit_code::config;
  }
  if (!system->graph().is_connected()) {
    err << "warning: interaction graph is not connected\n";
  }

  RunResult result;
  try {
    result = run(*system, initial, config.integrator, config.stride);
  } catch (const Error& e) {
    err << "config error: " << e.what() << '\n';
    return exit_code::config;
  }
  const TrajectoryRecord& record = result.record;

  try {
    const fs::path dir(config.output_dir);
    fs::create_directories(dir);
    {
      std::ofstream csv(dir / "trajectory.csv", std::ios::binary);
      if (!csv) throw ConfigError("output", "cannot write '" + (dir / "trajectory.csv").string() + "'");
      write_csv(record, csv);
    }
    if (config.write_json) {
      std::ofstream json(dir / "trajectory.json", std::ios::binary);
      write_json(record, json);
    }
    if (options.plots) {
      const TrajectoryTable table = to_table(record);
      for (PlotKind kind : {PlotKind::xy, PlotKind::attitude, PlotKind::controls}) {
        write_file(dir / (std::string(to_string(kind)) + ".svg"), render_svg(table, kind));
      }
    }
  } catch (const std::exception& e) {
    err << "output error: " << e.what() << '\n';
    return exit_code::config;
  }

  const double drift = record.samples.empty()
                          ? 0.0
                          : std::abs(record.samples.back().hamiltonian -
                                     record.samples.front().hamiltonian);
  char buf[256];
  out << "scenario: " << config.name << '\n';
  out << "integrator: " << to_string(config.integrator.method) << ", h = "
      << format_number(config.integrator.step) << '\n';
  std::snprintf(buf, sizeof buf, "steps completed: %zu / %zu\n", record.steps_completed,
                config.integrator.steps);
  out << buf;
  std::snprintf(buf, sizeof buf, "min distance: %.6g\n", record.min_distance);
  out << buf;
  std::snprintf(buf, sizeof buf, "hamiltonian drift: %.3e\n", drift);
  out << buf;
  out << "output: " << config.output_dir << '\n';

  if (record.failure) {
    const bool collision = record.failure->kind == RunFailure::Kind::collision;
    err << (collision ? "collision" : "numerical failure") << " at step " << record.failure->step
        << ": " << record.failure->message << '\n';
    return collision ? exit_code::collision : exit_code::numerical;
  }
  return exit_code::ok;
}

int cmd_check(CheckLevel level, std::uint64_t seed, std::ostream& out, const CheckHooks& hooks) {
  const auto results = run_checks(level, seed, hooks);
  print_report(results, out);
  return all_passed(results) ? 0 : 1;
}

int cmd_plot(const std::string& csv_path, PlotKind kind, const std::string& svg_path,
             std::ostream& err) {
  try {
    const TrajectoryTable table = read_csv_file(csv_path);
    write_file(svg_path, render_svg(table, kind));
  } catch (const ParseError& e) {
    err << csv_path << ": " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  }
  return 0;
}

int cmd_dump_algebra(std::ostream& out) {
  const auto sc = StructureConstants::se2();
  const auto d = Decomposition::se2();

  out << "basis of se(2):\n";
  for (Index k = 0; k < 3; ++k) {
    out << basis_name(k) << " =\n" << matrix_rows(se2::basis()[std::size_t(k)]);
  }
  out << "dual basis:\n";
  for (Index k = 0; k < 3; ++k) {
    out << "e^" << k + 1 << " =\n" << matrix_rows(se2::dual_basis()[std::size_t(k)]);
  }

  out << "brackets:\n";
  for (Index i = 0; i < 3; ++i) {
    for (Index j = i + 1; j < 3; ++j) {
      const AlgebraVector b = bracket(sc, AlgebraVector::unit(3, i), AlgebraVector::unit(3, j));
      out << "  [" << basis_name(i) << "," << basis_name(j) << "] = " << combination(b) << '\n';
    }
  }

  out << "structure constants C(k,i,j), nonzero entries:\n";
  for (Index k = 0; k < 3; ++k) {
    for (Index i = 0; i < 3; ++i) {
      for (Index j = 0; j < 3; ++j) {
        if (sc(k, i, j) == 0.0) continue;
        out << "  C(" << k + 1 << "," << i + 1 << "," << j + 1 << ") = " << format_number(sc(k, i, j))
            << '\n';
      }
    }
  }

  out << "pairing <e^i, e_j> = tr(e^i e_j):\n";
  Eigen::Matrix3d pairing_matrix;
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      pairing_matrix(i, j) =
          (se2::dual_basis()[std::size_t(i)] * se2::basis()[std::size_t(j)]).trace();
    }
  }
  out << matrix_rows(pairing_matrix);

  out << "decomposition r = {e1, e2}, s = {e3}: "
      << (check_decomposition(sc, d) ? "valid" : "invalid") << '\n';
  return 0;
}

}  // namespace symred::cli
