#include "symred/cli/checks.hpp"

#include "symred/cli/scenario.hpp"
#include "symred/errors.hpp"
#include "symred/interaction.hpp"
#include "symred/se2.hpp"
#include "symred/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>

namespace symred::cli {

namespace {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

AlgebraVector random_algebra(Rng& rng, double scale = 1.0) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

DualVector random_dual(Rng& rng, double scale = 1.0) {
  return {uniform(rng, -scale, scale), uniform(rng, -scale, scale), uniform(rng, -scale, scale)};
}

se2::GroupElement random_pose(Rng& rng, double extent = 2.0) {
  return se2::from_pose(uniform(rng, -extent, extent), uniform(rng, -extent, extent),
                        uniform(rng, -std::numbers::pi, std::numbers::pi));
}

CheckResult result(std::string name, double value, double tolerance) {
  return {std::move(name), std::isfinite(value) && value <= tolerance, value, tolerance};
}

// Three-agent scenario with oracle coupling forces, in the requested form.
struct Fixture {
  ReducedSystem system;
  MultiAgentState state;
};

Fixture unicycles(Formulation formulation) {
  const ScenarioConfig config = preset("unicycles-oracle");
  ReducedSystem system = build_system(config);
  MultiAgentState state = initial_state(config, system);
  if (formulation == Formulation::lagrangian) state = system.to_lagrangian(state);
  return {std::move(system), std::move(state)};
}

double pose_deviation(const MultiAgentState& a, const MultiAgentState& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.agents.size(); ++i) {
    const Eigen::Matrix3d d = a.agents[i].pose.matrix() - b.agents[i].pose.matrix();
    worst = std::max(worst, d.cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace

CheckLevel parse_check_level(const std::string& name) {
  if (name == "quick") return CheckLevel::quick;
  if (name == "full") return CheckLevel::full;
  throw InputError("check level must be quick or full, got '" + name + "'");
}

CheckResult check_antisymmetry() {
  return result("structure_antisymmetry", StructureConstants::se2().antisymmetry_defect(), 0.0);
}

CheckResult check_jacobi() {
  return result("structure_jacobi", StructureConstants::se2().jacobi_defect(), 0.0);
}

CheckResult check_trace_pairing() {
  double worst = 0.0;
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      const double trace = (se2::dual_basis()[std::size_t(i)] * se2::basis()[std::size_t(j)]).trace();
      const double coeff = pairing(DualVector::unit(3, i), AlgebraVector::unit(3, j));
      worst = std::max(worst, std::abs(trace - coeff));
      worst = std::max(worst, std::abs(coeff - (i == j ? 1.0 : 0.0)));
    }
  }
  return result("trace_pairing", worst, 0.0);
}

CheckResult check_ad_star_adjointness(std::uint64_t seed, const CheckHooks& hooks) {
  const auto sc = StructureConstants::se2();
  Rng rng(seed);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const AlgebraVector xi = random_algebra(rng);
    const AlgebraVector eta = random_algebra(rng);
    const DualVector mu = random_dual(rng);
    const double lhs = pairing(hooks.ad_star(sc, xi, mu), eta);
    const double rhs = pairing(mu, bracket(sc, xi, eta));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return result("ad_star_adjointness", worst, 1e-12);
}

CheckResult check_commutator_basis() {
  const auto sc = StructureConstants::se2();
  double worst = 0.0;
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      const Eigen::Matrix3d a = se2::basis()[std::size_t(i)];
      const Eigen::Matrix3d b = se2::basis()[std::size_t(j)];
      const AlgebraVector c = se2::vee(a * b - b * a);
      const AlgebraVector expected = bracket(sc, AlgebraVector::unit(3, i), AlgebraVector::unit(3, j));
      worst = std::max(worst, (c - expected).coeffs().cwiseAbs().maxCoeff());
    }
  }
  return result("commutator_basis", worst, 0.0);
}

CheckResult check_commutator_random(std::uint64_t seed) {
  const auto sc = StructureConstants::se2();
  Rng rng(seed);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    const AlgebraVector xi = random_algebra(rng);
    const AlgebraVector eta = random_algebra(rng);
    const Eigen::Matrix3d a = se2::hat(xi);
    const Eigen::Matrix3d b = se2::hat(eta);
    worst = std::max(worst, (se2::vee(a * b - b * a) - bracket(sc, xi, eta)).norm());
  }
  return result("commutator_random", worst, 1e-13);
}

CheckResult check_exp_log(std::uint64_t seed) {
  Rng rng(seed);
  const double w_max = std::numbers::pi - 0.1;
  double worst = 0.0;
  int accepted = 0;
  while (accepted < 1000) {
    const AlgebraVector xi{uniform(rng, -w_max, w_max), uniform(rng, -3.0, 3.0),
                           uniform(rng, -3.0, 3.0)};
    if (xi.norm() > 3.0) continue;
    ++accepted;
    worst = std::max(worst, (se2::log(se2::exp(xi)) - xi).norm());
  }
  return result("exp_log_roundtrip", worst, 1e-10);
}

CheckResult check_decomposition_se2() {
  const bool ok = check_decomposition(StructureConstants::se2(), Decomposition::se2());
  return result("decomposition_se2_valid", ok ? 0.0 : 1.0, 0.0);
}

// r = {e1}, s = {e2, e3} fails [s, r] in r: [e2, e1] = -e3.
CheckResult check_decomposition_rejected() {
  const bool ok = check_decomposition(StructureConstants::se2(), Decomposition(3, {0}, {1, 2}));
  return result("decomposition_r1_s23_rejected", ok ? 1.0 : 0.0, 0.0);
}

// r = {e1, e3}, s = {e2} is the mirror image of the standard split under
// e2 <-> e3 and satisfies all three inclusions.
CheckResult check_decomposition_mirrored() {
  const bool ok = check_decomposition(StructureConstants::se2(), Decomposition(3, {0, 2}, {1}));
  return result("decomposition_r13_s2_valid", ok ? 0.0 : 1.0, 0.0);
}

CheckResult check_coupling_oracle(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const EdgeParams p{uniform(rng, 0.5, 2.0), uniform(rng, 0.05, 0.15)};
    const se2::GroupElement gi = random_pose(rng);
    se2::GroupElement gj = random_pose(rng);
    while ((gi.position() - gj.position()).norm() < 2.0 * p.d) gj = random_pose(rng);

    const DualVector analytic = coupling_force(p, gi, gj);
    const DualVector fd = se2::body_gradient_fd(
        gi, [&](const se2::GroupElement& g) { return potential(p, g, gj); });
    worst = std::max(worst, (analytic - fd).norm() / std::max(analytic.norm(), 1e-300));
  }
  return result("coupling_force_oracle", worst, 1e-6);
}

CheckResult check_coupling_invariance(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int n = 0; n < 100; ++n) {
    const EdgeParams p{1.0, 0.1};
    const se2::GroupElement gi = random_pose(rng);
    se2::GroupElement gj = random_pose(rng);
    while ((gi.position() - gj.position()).norm() < 2.0 * p.d) gj = random_pose(rng);
    const se2::GroupElement h = random_pose(rng);
    const DualVector a = coupling_force(p, gi, gj);
    const DualVector b = coupling_force(p, se2::compose(h, gi), se2::compose(h, gj));
    worst = std::max(worst, (a - b).norm() / std::max(a.norm(), 1e-300));
  }
  return result("coupling_force_invariance", worst, 1e-12);
}

CheckResult check_formulation_equivalence() {
  const Fixture ham = unicycles(Formulation::hamiltonian);
  const Fixture lag = unicycles(Formulation::lagrangian);
  MultiAgentState h = ham.state;
  MultiAgentState l = lag.state;
  double worst = 0.0;
  for (int n = 0; n < 10000; ++n) {
    h = step_rk4_chart(ham.system, h, 1e-4, true);
    l = step_rk4_chart(lag.system, l, 1e-4, true);
    worst = std::max(worst, pose_deviation(h, l));
    const MultiAgentState mapped = lag.system.to_hamiltonian(l);
    for (std::size_t i = 0; i < h.agents.size(); ++i) {
      worst = std::max(worst, (mapped.agents[i].costate - h.agents[i].costate).norm());
    }
  }
  return result("formulation_equivalence", worst, 1e-6);
}

CheckResult check_hamiltonian_conservation() {
  const Fixture f = unicycles(Formulation::hamiltonian);
  MultiAgentState s = f.state;
  const double h0 = f.system.reduced_hamiltonian(s);
  for (int n = 0; n < 15000; ++n) s = step_rk4_chart(f.system, s, 1e-3, true);
  return result("hamiltonian_conservation", std::abs(f.system.reduced_hamiltonian(s) - h0), 1e-6);
}

CheckResult check_left_equivariance(std::uint64_t seed) {
  Rng rng(seed);
  const se2::GroupElement h0 = random_pose(rng);
  const Fixture f = unicycles(Formulation::hamiltonian);
  MultiAgentState a = f.state;
  MultiAgentState b = f.state;
  for (auto& agent : b.agents) agent.pose = se2::compose(h0, agent.pose);
  double worst = 0.0;
  for (int n = 0; n < 1000; ++n) {
    a = step_rk4_chart(f.system, a, 1e-3, true);
    b = step_rk4_chart(f.system, b, 1e-3, true);
    for (std::size_t i = 0; i < a.agents.size(); ++i) {
      const Eigen::Matrix3d moved = h0.matrix() * a.agents[i].pose.matrix();
      worst = std::max(worst, (moved - b.agents[i].pose.matrix()).norm());
      worst = std::max(worst, (a.agents[i].costate - b.agents[i].costate).norm());
    }
  }
  return result("left_equivariance", worst, 1e-9);
}

// A lone agent feels no coupling force, so mu stays on its coadjoint orbit.
CheckResult check_casimir() {
  const InteractionGraph graph = InteractionGraph::complete(1);
  ReducedSystem system(StructureConstants::se2(), Decomposition::se2(), {CostMetric::se2_default()},
                       graph, PotentialParams(graph, {1.0, 0.1}));
  MultiAgentState s{Formulation::hamiltonian,
                    {{se2::from_pose(0.3, -0.2, 0.7), {}, DualVector{5.0, 1.25, 0.4}}}};
  auto casimir = [](const MultiAgentState& m) {
    const DualVector& mu = m.agents[0].costate;
    return mu[1] * mu[1] + mu[2] * mu[2];
  };
  const double c0 = casimir(s);
  double worst = 0.0;
  for (int n = 0; n < 10000; ++n) {
    s = step_rk4_chart(system, s, 1e-3, true);
    worst = std::max(worst, std::abs(casimir(s) - c0));
  }
  return result("casimir", worst, 1e-8);
}

std::vector<CheckResult> run_checks(CheckLevel level, std::uint64_t seed, const CheckHooks& hooks) {
  std::vector<CheckResult> out{
      check_antisymmetry(),
      check_jacobi(),
      check_trace_pairing(),
      check_ad_star_adjointness(seed, hooks),
      check_commutator_basis(),
      check_commutator_random(seed + 1),
      check_exp_log(seed + 2),
      check_decomposition_se2(),
      check_decomposition_rejected(),
      check_decomposition_mirrored(),
      check_coupling_oracle(seed + 3),
      check_coupling_invariance(seed + 4),
  };
  if (level == CheckLevel::full) {
    out.push_back(check_formulation_equivalence());
    out.push_back(check_hamiltonian_conservation());
    out.push_back(check_left_equivariance(seed + 5));
    out.push_back(check_casimir());
  }
  return out;
}

void print_report(const std::vector<CheckResult>& results, std::ostream& out) {
  for (const auto& r : results) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s %s value=%.3e tolerance=%.1e", r.passed ? "PASS" : "FAIL",
                  r.name.c_str(), r.value, r.tolerance);
    out << buf << '\n';
  }
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace symred::cli
