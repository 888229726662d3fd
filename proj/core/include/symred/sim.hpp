#pragma once

#include "symred/dynamics.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace symred {

enum class Method {
  euler_matrix,  // g <- g + h g hat(u), entrywise
  lie_euler,     // g <- g exp(h u)
  rk4_chart,     // fourth-order Runge-Kutta-Munthe-Kaas in the exp chart
};

struct IntegratorSpec {
  Method method = Method::rk4_chart;
  double step = 1e-3;       // s
  std::size_t steps = 1;    // N
  bool reorthonormalize = true;

  /// Throws InputError unless step > 0 and steps >= 1.
  void validate() const;
};

/// One explicit step of the chosen method. Throws CollisionError from the
/// right-hand side and NumericalError if the new state is not finite.
MultiAgentState step(const ReducedSystem& system, const MultiAgentState& state,
                     const IntegratorSpec& spec);

MultiAgentState step_euler_matrix(const ReducedSystem& system, const MultiAgentState& state,
                                  double h, bool reorthonormalize = false);
MultiAgentState step_lie_euler(const ReducedSystem& system, const MultiAgentState& state,
                               double h, bool reorthonormalize = false);
MultiAgentState step_rk4_chart(const ReducedSystem& system, const MultiAgentState& state,
                               double h, bool reorthonormalize = false);

struct TrajectorySample {
  std::size_t step = 0;
  double time = 0.0;
  std::vector<se2::Pose> poses;
  std::vector<AlgebraVector> controls;
  std::vector<DualVector> costates;
  double min_distance = 0.0;
  double hamiltonian = 0.0;
  double orthogonality_defect = 0.0;  // max over agents
};

struct RunFailure {
  enum class Kind { collision, numerical };
  Kind kind;
  std::size_t step;  // index of the state found in collision or that could not be advanced
  double time;
  std::string message;
};

struct TrajectoryRecord {
  Formulation formulation = Formulation::hamiltonian;
  std::size_t agent_count = 0;
  std::vector<TrajectorySample> samples;
  std::optional<RunFailure> failure;
  std::size_t steps_completed = 0;
  // Over every integrated state, not just the recorded ones.
  double min_distance = std::numeric_limits<double>::infinity();

  bool completed() const { return !failure.has_value(); }
};

struct RunResult {
  TrajectoryRecord record;
  MultiAgentState final_state;  // last successfully computed state
};

/// Monitors and per-agent data for one state.
TrajectorySample sample(const ReducedSystem& system, const MultiAgentState& state,
                        std::size_t step_index, double time);

/// Integrates `spec.steps` steps from `initial`, recording every `stride`-th
/// state and always the last one. Collisions and non-finite values stop the
/// run and are reported in record.failure; invalid input throws.
RunResult run(const ReducedSystem& system, const MultiAgentState& initial,
              const IntegratorSpec& spec, std::size_t stride = 1);

const char* to_string(Method m);

}  // namespace symred
