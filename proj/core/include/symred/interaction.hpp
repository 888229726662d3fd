#pragma once

// Interaction graph and pairwise collision-avoidance potentials
//
//   V_ij(g_i, g_j) = sigma_ij / (2 (|p_i - p_j|^2 - d_ij^2))
//
// and the body-frame forces they induce on each agent.

#include "symred/lie_algebra.hpp"
#include "symred/se2.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace symred {

/// Undirected, static interaction graph on agents 0..r-1.
class InteractionGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // first < second

  /// Throws InputError on self-loops, out-of-range or duplicate edges.
  InteractionGraph(std::size_t agents, const std::vector<Edge>& edges);
  static InteractionGraph complete(std::size_t agents);

  std::size_t agent_count() const noexcept { return agents_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Sorted ascending, so neighbor sums reduce in a fixed order.
  const std::vector<std::size_t>& neighbors(std::size_t i) const;
  bool has_edge(std::size_t i, std::size_t j) const;
  bool is_connected() const;

 private:
  std::size_t agents_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

struct EdgeParams {
  double sigma = 1.0;  // potential strength
  double d = 0.1;      // prescribed distance (m)
};

/// Per-edge potential parameters, stored on unordered pairs so that
/// params(i, j) == params(j, i) by construction.
class PotentialParams {
 public:
  PotentialParams(const InteractionGraph& graph, EdgeParams uniform, double safety_radius = 0.0);

  /// Overrides one edge. Throws InputError if (i, j) is not an edge or the
  /// values are not positive.
  void set(std::size_t i, std::size_t j, EdgeParams p);
  const EdgeParams& at(std::size_t i, std::size_t j) const;
  double safety_radius() const noexcept { return safety_radius_; }

 private:
  std::map<InteractionGraph::Edge, EdgeParams> params_;
  double safety_radius_;
};

enum class GammaMode {
  oracle,  // body-frame gradient of V_ij
  paper,   // printed closed forms, replayed verbatim
};

using se2::GroupElement;

/// |p_i - p_j|^2 - d^2; throws CollisionError when not positive.
double shell_gap(const EdgeParams& p, const GroupElement& gi, const GroupElement& gj);

double potential(const EdgeParams& p, const GroupElement& gi, const GroupElement& gj);

/// Body-frame pullback of dV_ij/dg_i: component k = d/dt V(g_i exp(t e_k), g_j) at 0.
DualVector coupling_force(const EdgeParams& p, const GroupElement& gi, const GroupElement& gj);

/// Printed closed forms
///   Gamma  = -sigma (x_j - x_i) / (16 D^2)   (coefficient of e^2)
///   Gamma~ = -sigma (y_j - y_i) / (16 D^2)   (coefficient of e^3)
/// arranged as (0, Gamma, -Gamma~) so that, fed through the same "- F" slot
/// as the oracle force, the replicated system reads
///   u2' = ... - sum Gamma,   lambda3' = ... + sum Gamma~.
DualVector paper_coupling_force(const EdgeParams& p, const GroupElement& gi,
                                const GroupElement& gj);

DualVector coupling_force(GammaMode mode, const EdgeParams& p, const GroupElement& gi,
                          const GroupElement& gj);

/// (project(force, R), project(force, S)).
std::pair<DualVector, DualVector> gamma_split(const DualVector& force, const Decomposition& d);

using EdgeEvaluator =
    std::function<DualVector(const EdgeParams&, const GroupElement&, const GroupElement&)>;

/// sum_{j in N_i} f(params_ij, g_i, g_j), accumulated in ascending j.
/// Collisions are rethrown with the agent pair filled in.
DualVector neighbor_sum(const InteractionGraph& graph, const PotentialParams& params,
                        std::span<const GroupElement> poses, std::size_t i,
                        const EdgeEvaluator& f, Index dim = 3);

/// sum over edges of V_ij (each unordered pair counted once).
double total_potential(const InteractionGraph& graph, const PotentialParams& params,
                       std::span<const GroupElement> poses);

/// Smallest center distance over all agent pairs (infinity for < 2 agents).
double min_pairwise_distance(std::span<const GroupElement> poses);

}  // namespace symred
