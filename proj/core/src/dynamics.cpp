#include "symred/dynamics.hpp"

#include "symred/errors.hpp"

#include <cmath>
#include <string>

namespace symred {

namespace {

using Part = Decomposition::Part;

constexpr double kSupportTolerance = 1e-12;

bool supported_on(const Eigen::VectorXd& v, const std::vector<Index>& outside) {
  for (Index k : outside) {
    if (std::abs(v[k]) > kSupportTolerance) return false;
  }
  return true;
}

}  // namespace

std::vector<se2::GroupElement> MultiAgentState::poses() const {
  std::vector<se2::GroupElement> out;
  out.reserve(agents.size());
  for (const auto& a : agents) out.push_back(a.pose);
  return out;
}

AlgebraVector optimal_control(const DualVector& mu, const CostMetric& w) { return w.solve_r(mu); }

DualVector legendre(const AlgebraVector& u, const DualVector& lambda, const CostMetric& w) {
  const auto& d = w.decomposition();
  if (lambda.size() != d.dim()) throw InputError("legendre: multiplier dimension mismatch");
  if (!supported_on(lambda.coeffs(), d.r_indices())) {
    throw InputError("legendre: multiplier has components on actuated directions");
  }
  return w.gradient(u) + lambda;
}

std::pair<AlgebraVector, DualVector> legendre_inverse(const DualVector& mu, const CostMetric& w) {
  return {w.solve_r(mu), project(mu, w.decomposition(), Part::S)};
}

ReducedSystem::ReducedSystem(StructureConstants algebra, Decomposition decomposition,
                             std::vector<CostMetric> metrics, InteractionGraph graph,
                             PotentialParams params, GammaMode gamma_mode)
    : algebra_(std::move(algebra)),
      decomposition_(std::move(decomposition)),
      metrics_(std::move(metrics)),
      graph_(std::move(graph)),
      params_(std::move(params)),
      gamma_mode_(gamma_mode) {
  if (algebra_.dim() != decomposition_.dim()) {
    throw InputError("reduced system: decomposition dimension differs from the algebra");
  }
  if (!check_decomposition(algebra_, decomposition_)) {
    throw InputError("reduced system: decomposition violates the bracket inclusions");
  }
  if (metrics_.size() != graph_.agent_count()) {
    throw InputError("reduced system: expected one cost metric per agent");
  }
  for (const auto& m : metrics_) {
    if (m.decomposition().r_indices() != decomposition_.r_indices()) {
      throw InputError("reduced system: cost metric uses a different decomposition");
    }
  }
  if (algebra_.dim() != 3) {
    throw InputError("reduced system: only the SE(2) group layer is available");
  }
}

DualVector ReducedSystem::coupling(std::span<const se2::GroupElement> poses,
                                   std::size_t i) const {
  const GammaMode mode = gamma_mode_;
  return neighbor_sum(
      graph_, params_, poses, i,
      [mode](const EdgeParams& p, const se2::GroupElement& gi, const se2::GroupElement& gj) {
        return coupling_force(mode, p, gi, gj);
      },
      algebra_.dim());
}

void ReducedSystem::validate(const MultiAgentState& state) const {
  if (state.agents.size() != agent_count()) {
    throw InputError("state has " + std::to_string(state.agents.size()) + " agents, system has " +
                     std::to_string(agent_count()));
  }
  const Index n = algebra_.dim();
  for (std::size_t i = 0; i < state.agents.size(); ++i) {
    const auto& a = state.agents[i];
    const std::string who = "agent " + std::to_string(i + 1);
    if (a.costate.size() != n) throw InputError(who + ": costate dimension mismatch");
    if (!a.costate.all_finite()) throw InputError(who + ": non-finite costate");
    if (state.formulation == Formulation::lagrangian) {
      if (a.control.size() != n) throw InputError(who + ": control dimension mismatch");
      if (!a.control.all_finite()) throw InputError(who + ": non-finite control");
      if (!supported_on(a.control.coeffs(), decomposition_.s_indices())) {
        throw InputError(who + ": control has components on unactuated directions");
      }
      if (!supported_on(a.costate.coeffs(), decomposition_.r_indices())) {
        throw InputError(who + ": multiplier has components on actuated directions");
      }
    }
  }
}

std::vector<AgentRate> ReducedSystem::lagrangian_rhs(const MultiAgentState& state) const {
  if (state.formulation != Formulation::lagrangian) {
    throw InputError("lagrangian_rhs: state is not in Lagrangian form");
  }
  validate(state);
  const auto poses = state.poses();
  std::vector<AgentRate> rates;
  rates.reserve(state.agents.size());
  for (std::size_t i = 0; i < state.agents.size(); ++i) {
    const auto& a = state.agents[i];
    const CostMetric& w = metrics_[i];
    const DualVector force = coupling(poses, i);
    const auto [force_r, force_s] = gamma_split(force, decomposition_);

    const DualVector momentum_rate_r =
        project(ad_star(algebra_, a.control, a.costate), decomposition_, Part::R) - force_r;
    const DualVector lambda_rate =
        project(ad_star(algebra_, a.control, w.gradient(a.control)), decomposition_, Part::S) -
        force_s;

    rates.push_back({a.control, w.solve_r(momentum_rate_r), lambda_rate});
  }
  return rates;
}

std::vector<AgentRate> ReducedSystem::hamiltonian_rhs(const MultiAgentState& state) const {
  if (state.formulation != Formulation::hamiltonian) {
    throw InputError("hamiltonian_rhs: state is not in Hamiltonian form");
  }
  validate(state);
  const auto poses = state.poses();
  std::vector<AgentRate> rates;
  rates.reserve(state.agents.size());
  for (std::size_t i = 0; i < state.agents.size(); ++i) {
    const auto& a = state.agents[i];
    const AlgebraVector u = optimal_control(a.costate, metrics_[i]);
    DualVector mu_rate = ad_star(algebra_, u, a.costate) - coupling(poses, i);
    rates.push_back({u, AlgebraVector{}, std::move(mu_rate)});
  }
  return rates;
}

std::vector<AgentRate> ReducedSystem::rhs(const MultiAgentState& state) const {
  return state.formulation == Formulation::lagrangian ? lagrangian_rhs(state)
                                                      : hamiltonian_rhs(state);
}

double ReducedSystem::reduced_hamiltonian(const MultiAgentState& state) const {
  validate(state);
  double kinetic = 0.0;
  for (std::size_t i = 0; i < state.agents.size(); ++i) {
    const auto& a = state.agents[i];
    const CostMetric& w = metrics_[i];
    const DualVector mu = state.formulation == Formulation::lagrangian
                              ? legendre(a.control, a.costate, w)
                              : a.costate;
    // <mu, u*> - C(u*) = 1/2 <P_r mu, W^{-1} P_r mu>
    kinetic += 0.5 * pairing(project(mu, decomposition_, Part::R), w.solve_r(mu));
  }
  const auto poses = state.poses();
  return kinetic + total_potential(graph_, params_, poses);
}

std::vector<AlgebraVector> ReducedSystem::controls(const MultiAgentState& state) const {
  std::vector<AlgebraVector> out;
  out.reserve(state.agents.size());
  for (std::size_t i = 0; i < state.agents.size(); ++i) {
    const auto& a = state.agents[i];
    out.push_back(state.formulation == Formulation::lagrangian
                      ? a.control
                      : optimal_control(a.costate, metrics_[i]));
  }
  return out;
}

MultiAgentState ReducedSystem::to_hamiltonian(const MultiAgentState& state) const {
  if (state.formulation == Formulation::hamiltonian) return state;
  validate(state);
  MultiAgentState out{Formulation::hamiltonian, {}};
  out.agents.reserve(state.agents.size());
  for (std::size_t i = 0; i < state.agents.size(); ++i) {
    const auto& a = state.agents[i];
    out.agents.push_back({a.pose, AlgebraVector{}, legendre(a.control, a.costate, metrics_[i])});
  }
  return out;
}

MultiAgentState ReducedSystem::to_lagrangian(const MultiAgentState& state) const {
  if (state.formulation == Formulation::lagrangian) return state;
  validate(state);
  MultiAgentState out{Formulation::lagrangian, {}};
  out.agents.reserve(state.agents.size());
  for (std::size_t i = 0; i < state.agents.size(); ++i) {
    const auto& a = state.agents[i];
    auto [u, lambda] = legendre_inverse(a.costate, metrics_[i]);
    out.agents.push_back({a.pose, std::move(u), std::move(lambda)});
  }
  return out;
}

}  // namespace symred
