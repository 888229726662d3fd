#pragma once

// Scenario configuration: JSON ingestion, built-in presets, and assembly of
// the ReducedSystem and initial state.
//
// Config layout (all sections optional except "agents"):
//
//   {
//     "group": "SE2",
//     "formulation": "lagrangian" | "hamiltonian",
//     "agents": [
//       { "pose": [x, y, theta], "u": [u1, u2], "lambda": [l3] },
//       { "matrix": [[..], [..], [..]], "mu": [m1, m2, m3] }
//     ],
//     "graph": "complete" | { "edges": [[1, 2], [2, 3]] },
//     "potential": { "sigma": 1, "d": 0.1, "safety_radius": 0.05,
//                    "edges": [ { "between": [1, 2], "sigma": 2, "d": 0.2 } ] },
//     "cost_metric": [[2, 0, 0], [0, 1, 0], [0, 0, 0]],
//     "integrator": { "method": "rk4", "step": 0.001, "steps": 15000,
//                     "reorthonormalize": true },
//     "gamma_mode": "oracle" | "paper",
//     "output": { "dir": "out", "stride": 1, "json": false }
//   }
//
// Agents are numbered from 1 in edge lists.

#include "symred/dynamics.hpp"
#include "symred/sim.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace symred::cli {

struct AgentConfig {
  Eigen::Matrix3d initial_pose = Eigen::Matrix3d::Identity();
  std::optional<AlgebraVector> control;      // u, full coefficient vector
  std::optional<DualVector> multiplier;      // lambda
  std::optional<DualVector> momentum;        // mu
  std::optional<Eigen::Matrix3d> cost_metric;
};

struct EdgeOverride {
  std::size_t i = 0;  // 0-based
  std::size_t j = 0;
  EdgeParams params;
};

struct ScenarioConfig {
  std::string name = "custom";
  std::string group = "SE2";
  Formulation formulation = Formulation::hamiltonian;
  std::vector<AgentConfig> agents;
  bool complete_graph = true;
  std::vector<InteractionGraph::Edge> edges;  // 0-based, used when !complete_graph
  EdgeParams edge_defaults{1.0, 0.1};
  std::vector<EdgeOverride> edge_overrides;
  double safety_radius = 0.0;
  Eigen::Matrix3d cost_metric = Eigen::Vector3d(2.0, 1.0, 0.0).asDiagonal();
  IntegratorSpec integrator;
  GammaMode gamma_mode = GammaMode::oracle;
  std::string output_dir = ".";
  std::size_t stride = 1;
  bool write_json = false;
};

/// Parses JSON text. Throws ConfigError naming the offending field.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);

/// Names accepted by preset().
std::vector<std::string> preset_names();

/// Built-in scenarios:
///   paper-unicycles   three unicycles on an equilateral triangle of side 1/2,
///                     Lagrangian form, entrywise Euler, h = 1e-3, N = 15000,
///                     printed coupling forces, K3, no re-orthonormalization.
///   unicycles-oracle  same initial data, Hamiltonian form, RK4 chart,
///                     oracle coupling forces.
/// Throws ConfigError for unknown names.
ScenarioConfig preset(const std::string& name);

/// Preset name or path to a JSON file.
ScenarioConfig resolve_scenario(const std::string& preset_or_path);

/// Throws ConfigError.
ReducedSystem build_system(const ScenarioConfig& config);
MultiAgentState initial_state(const ScenarioConfig& config, const ReducedSystem& system);

Method parse_method(const std::string& name);
GammaMode parse_gamma_mode(const std::string& name);
Formulation parse_formulation(const std::string& name);

}  // namespace symred::cli
