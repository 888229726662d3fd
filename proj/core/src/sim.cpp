#include "symred/sim.hpp"

#include "symred/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace symred {

namespace {

bool finite(const MultiAgentState& s) {
  return std::all_of(s.agents.begin(), s.agents.end(), [](const AgentState& a) {
    return a.pose.matrix().allFinite() && a.control.all_finite() && a.costate.all_finite();
  });
}

MultiAgentState finish(MultiAgentState next, bool reorthonormalize) {
  if (reorthonormalize) {
    for (auto& a : next.agents) a.pose = se2::reorthonormalize(a.pose);
  }
  if (!finite(next)) throw NumericalError("non-finite state");
  return next;
}

// state + h * rates on the vector-space part (controls, costates).
MultiAgentState advance_fibers(const MultiAgentState& base, const std::vector<AgentRate>& rates,
                               double h) {
  MultiAgentState out = base;
  for (std::size_t i = 0; i < out.agents.size(); ++i) {
    out.agents[i].control += h * rates[i].control_rate;
    out.agents[i].costate += h * rates[i].costate_rate;
  }
  return out;
}

}  // namespace

void IntegratorSpec::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) throw InputError("integrator: step must be positive");
  if (steps < 1) throw InputError("integrator: steps must be at least 1");
}

MultiAgentState step_euler_matrix(const ReducedSystem& system, const MultiAgentState& state,
                                  double h, bool reorthonormalize) {
  const auto rates = system.rhs(state);
  MultiAgentState next = advance_fibers(state, rates, h);
  for (std::size_t i = 0; i < next.agents.size(); ++i) {
    const Eigen::Matrix3d& g = state.agents[i].pose.matrix();
    next.agents[i].pose = se2::GroupElement::unchecked(g + h * g * se2::hat(rates[i].velocity));
  }
  return finish(std::move(next), reorthonormalize);
}

MultiAgentState step_lie_euler(const ReducedSystem& system, const MultiAgentState& state,
                               double h, bool reorthonormalize) {
  const auto rates = system.rhs(state);
  MultiAgentState next = advance_fibers(state, rates, h);
  for (std::size_t i = 0; i < next.agents.size(); ++i) {
    next.agents[i].pose = se2::right_multiply_exp(state.agents[i].pose, h * rates[i].velocity);
  }
  return finish(std::move(next), reorthonormalize);
}

MultiAgentState step_rk4_chart(const ReducedSystem& system, const MultiAgentState& state,
                               double h, bool reorthonormalize) {
  const std::size_t r = state.agents.size();
  const auto& algebra = system.algebra();

  // Stage k evaluates the field at g exp(sigma_k) with fibers base + c_k h K_{k-1};
  // chart velocities are pulled back through dexp^{-1}_{sigma_k}.
  std::array<std::vector<AgentRate>, 4> k;
  std::array<std::vector<AlgebraVector>, 4> chart;
  constexpr std::array<double, 4> c{0.0, 0.5, 0.5, 1.0};

  for (std::size_t s = 0; s < 4; ++s) {
    MultiAgentState stage = state;
    std::vector<AlgebraVector> sigma(r, AlgebraVector::zero(algebra.dim()));
    if (s > 0) {
      stage = advance_fibers(state, k[s - 1], c[s] * h);
      for (std::size_t i = 0; i < r; ++i) {
        sigma[i] = (c[s] * h) * chart[s - 1][i];
        if (!sigma[i].all_finite()) throw NumericalError("non-finite stage velocity");
        stage.agents[i].pose = se2::right_multiply_exp(state.agents[i].pose, sigma[i]);
      }
    }
    if (!finite(stage)) throw NumericalError("non-finite stage state");
    k[s] = system.rhs(stage);
    chart[s].resize(r);
    for (std::size_t i = 0; i < r; ++i) {
      chart[s][i] = s == 0 ? k[s][i].velocity : dexp_inv(algebra, sigma[i], k[s][i].velocity);
    }
  }

  MultiAgentState next = state;
  for (std::size_t i = 0; i < r; ++i) {
    const AlgebraVector increment =
        (h / 6.0) * (chart[0][i] + 2.0 * chart[1][i] + 2.0 * chart[2][i] + chart[3][i]);
    next.agents[i].pose = se2::right_multiply_exp(state.agents[i].pose, increment);
    auto& a = next.agents[i];
    a.control += (h / 6.0) * (k[0][i].control_rate + 2.0 * k[1][i].control_rate +
                              2.0 * k[2][i].control_rate + k[3][i].control_rate);
    a.costate += (h / 6.0) * (k[0][i].costate_rate + 2.0 * k[1][i].costate_rate +
                              2.0 * k[2][i].costate_rate + k[3][i].costate_rate);
  }
  return finish(std::move(next), reorthonormalize);
}

MultiAgentState step(const ReducedSystem& system, const MultiAgentState& state,
                     const IntegratorSpec& spec) {
  switch (spec.method) {
    case Method::euler_matrix:
      return step_euler_matrix(system, state, spec.step, spec.reorthonormalize);
    case Method::lie_euler:
      return step_lie_euler(system, state, spec.step, spec.reorthonormalize);
    case Method::rk4_chart:
      return step_rk4_chart(system, state, spec.step, spec.reorthonormalize);
  }
  throw InputError("integrator: unknown method");
}

TrajectorySample sample(const ReducedSystem& system, const MultiAgentState& state,
                        std::size_t step_index, double time) {
  TrajectorySample s;
  s.step = step_index;
  s.time = time;
  const auto poses = state.poses();
  s.poses.reserve(poses.size());
  for (const auto& g : poses) {
    s.poses.push_back(g.pose());
    s.orthogonality_defect = std::max(s.orthogonality_defect, g.orthogonality_defect());
  }
  s.controls = system.controls(state);
  s.costates.reserve(state.agents.size());
  for (const auto& a : state.agents) s.costates.push_back(a.costate);
  s.min_distance = min_pairwise_distance(poses);
  s.hamiltonian = system.reduced_hamiltonian(state);
  return s;
}

RunResult run(const ReducedSystem& system, const MultiAgentState& initial,
              const IntegratorSpec& spec, std::size_t stride) {
  spec.validate();
  if (stride < 1) throw InputError("run: stride must be at least 1");
  system.validate(initial);

  RunResult result{{}, initial};
  auto& record = result.record;
  record.formulation = initial.formulation;
  record.agent_count = initial.agents.size();
  record.samples.reserve(spec.steps / stride + 2);

  MultiAgentState state = initial;
  std::size_t current = 0;  // index of the newest state
  auto fail = [&](RunFailure::Kind kind, const std::string& what) {
    record.failure = RunFailure{kind, current, double(current) * spec.step, what};
  };

  record.min_distance = min_pairwise_distance(state.poses());
  try {
    record.samples.push_back(sample(system, state, 0, 0.0));
    for (std::size_t n = 0; n < spec.steps; ++n) {
      state = step(system, state, spec);
      current = n + 1;
      result.final_state = state;
      record.steps_completed = current;
      record.min_distance = std::min(record.min_distance, min_pairwise_distance(state.poses()));
      if (current % stride == 0 || current == spec.steps) {
        record.samples.push_back(sample(system, state, current, double(current) * spec.step));
      }
    }
  } catch (const CollisionError& e) {
    fail(RunFailure::Kind::collision, e.what());
  } catch (const NumericalError& e) {
    fail(RunFailure::Kind::numerical, e.what());
  }
  return result;
}

const char* to_string(Method m) {
  switch (m) {
    case Method::euler_matrix:
      return "euler_matrix";
    case Method::lie_euler:
      return "lie_euler";
    case Method::rk4_chart:
      return "rk4_chart";
  }
  return "unknown";
}

}  // namespace symred
