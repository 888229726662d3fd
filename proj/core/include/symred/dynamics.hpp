#pragma once

// Reduced necessary conditions for the multi-agent energy-optimal problem
//
//   min  sum_i int C_i(u_i) + 1/2 sum_{j in N_i} V_ij dt,   g_i' = g_i u_i
//
// in two equivalent forms.
//
// Lagrangian (split) form, state (g_i, u_i, lambda_i) with u_i in r and
// lambda_i in s*:
//
//   W u_i'      = P_r(ad*_{u_i} lambda_i)  - P_r(F_i)
//   lambda_i'   = P_s(ad*_{u_i} W u_i)     - P_s(F_i)
//
// Hamiltonian (PMP) form, state (g_i, mu_i):
//
//   u_i*  = W^{-1} P_r(mu_i)
//   mu_i' = ad*_{u_i*} mu_i - F_i
//
// where F_i = sum_{j in N_i} of the body-frame coupling force. The two are
// related by the Legendre map mu = W u + lambda, and the Hamiltonian flow
// conserves
//
//   h = sum_i 1/2 P_r(mu_i)^T W^{-1} P_r(mu_i) + sum_{edges} V_ij.

#include "symred/interaction.hpp"
#include "symred/lie_algebra.hpp"
#include "symred/se2.hpp"

#include <utility>
#include <vector>

namespace symred {

enum class Formulation { lagrangian, hamiltonian };

struct AgentState {
  se2::GroupElement pose;
  AlgebraVector control;  // u (Lagrangian); unused and empty for Hamiltonian
  DualVector costate;     // lambda (Lagrangian) or mu (Hamiltonian)
};

struct MultiAgentState {
  Formulation formulation = Formulation::hamiltonian;
  std::vector<AgentState> agents;

  std::vector<se2::GroupElement> poses() const;
};

/// Time derivative of one agent's state. The pose derivative is
/// g' = g hat(velocity).
struct AgentRate {
  AlgebraVector velocity;
  AlgebraVector control_rate;  // empty for Hamiltonian states
  DualVector costate_rate;
};

/// u* = W^{-1} P_r(mu): the unique maximizer of <mu, u> - C(u) over u in r.
AlgebraVector optimal_control(const DualVector& mu, const CostMetric& w);

/// mu = W u + lambda. Throws InputError if u leaves r or lambda leaves s*.
DualVector legendre(const AlgebraVector& u, const DualVector& lambda, const CostMetric& w);

/// (W^{-1} P_r(mu), P_s(mu)).
std::pair<AlgebraVector, DualVector> legendre_inverse(const DualVector& mu, const CostMetric& w);

/// Shared model data: algebra, actuation split, per-agent metrics, graph,
/// potentials and the coupling-force variant.
class ReducedSystem {
 public:
  /// Throws InputError if the metrics do not match the agent count or
  /// decomposition, or if the decomposition fails check_decomposition.
  ReducedSystem(StructureConstants algebra, Decomposition decomposition,
                std::vector<CostMetric> metrics, InteractionGraph graph,
                PotentialParams params, GammaMode gamma_mode = GammaMode::oracle);

  const StructureConstants& algebra() const noexcept { return algebra_; }
  const Decomposition& decomposition() const noexcept { return decomposition_; }
  const CostMetric& metric(std::size_t i) const { return metrics_.at(i); }
  const InteractionGraph& graph() const noexcept { return graph_; }
  const PotentialParams& params() const noexcept { return params_; }
  GammaMode gamma_mode() const noexcept { return gamma_mode_; }
  std::size_t agent_count() const noexcept { return graph_.agent_count(); }

  /// Net coupling force F_i on agent i.
  DualVector coupling(std::span<const se2::GroupElement> poses, std::size_t i) const;

  std::vector<AgentRate> lagrangian_rhs(const MultiAgentState& state) const;
  std::vector<AgentRate> hamiltonian_rhs(const MultiAgentState& state) const;
  /// Dispatches on state.formulation.
  std::vector<AgentRate> rhs(const MultiAgentState& state) const;

  /// Conserved quantity of the Hamiltonian flow; Lagrangian states are
  /// mapped through the Legendre transform first.
  double reduced_hamiltonian(const MultiAgentState& state) const;

  /// Controls u_i: the state controls (Lagrangian) or u_i* (Hamiltonian).
  std::vector<AlgebraVector> controls(const MultiAgentState& state) const;

  MultiAgentState to_hamiltonian(const MultiAgentState& state) const;
  MultiAgentState to_lagrangian(const MultiAgentState& state) const;

  /// Checks agent count, dimensions and the support invariants
  /// P_s(u) = 0, P_r(lambda) = 0. Throws InputError.
  void validate(const MultiAgentState& state) const;

 private:
  StructureConstants algebra_;
  Decomposition decomposition_;
  std::vector<CostMetric> metrics_;
  InteractionGraph graph_;
  PotentialParams params_;
  GammaMode gamma_mode_;
};

}  // namespace symred
