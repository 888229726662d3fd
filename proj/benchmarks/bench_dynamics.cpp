#include "symred/interaction.hpp"
#include "symred/sim.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#ifdef SYMRED_BENCH_PRESETS
#include "symred/cli/scenario.hpp"
#endif

using namespace symred;

namespace {

// r unicycles on a circle of radius 1/2, facing tangentially.
struct Ring {
  ReducedSystem system;
  MultiAgentState state;
};

Ring ring(std::size_t r, Formulation f) {
  const auto g = InteractionGraph::complete(r);
  ReducedSystem sys(StructureConstants::se2(), Decomposition::se2(),
                    std::vector<CostMetric>(r, CostMetric::se2_default()), g,
                    PotentialParams(g, {1.0, 0.1}));
  MultiAgentState s{Formulation::hamiltonian, {}};
  for (std::size_t i = 0; i < r; ++i) {
    const double a = 2 * std::numbers::pi * double(i) / double(r);
    s.agents.push_back({se2::from_pose(0.5 * std::cos(a), 0.5 * std::sin(a), a + std::numbers::pi / 2),
                        {},
                        DualVector{1.0, 0.5, 0.0}});
  }
  if (f == Formulation::lagrangian) s = sys.to_lagrangian(s);
  return {std::move(sys), std::move(s)};
}

void BM_HamiltonianRhs(benchmark::State& st) {
  const Ring r = ring(std::size_t(st.range(0)), Formulation::hamiltonian);
  for (auto _ : st) benchmark::DoNotOptimize(r.system.hamiltonian_rhs(r.state));
}
BENCHMARK(BM_HamiltonianRhs)->Arg(3)->Arg(8)->Arg(16);

void BM_LagrangianRhs(benchmark::State& st) {
  const Ring r = ring(std::size_t(st.range(0)), Formulation::lagrangian);
  for (auto _ : st) benchmark::DoNotOptimize(r.system.lagrangian_rhs(r.state));
}
BENCHMARK(BM_LagrangianRhs)->Arg(3)->Arg(8)->Arg(16);

void BM_StepEulerMatrix(benchmark::State& st) {
  const Ring r = ring(3, Formulation::lagrangian);
  for (auto _ : st) benchmark::DoNotOptimize(step_euler_matrix(r.system, r.state, 1e-3));
}
BENCHMARK(BM_StepEulerMatrix);

void BM_StepRk4Chart(benchmark::State& st) {
  const Ring r = ring(std::size_t(st.range(0)), Formulation::hamiltonian);
  for (auto _ : st) benchmark::DoNotOptimize(step_rk4_chart(r.system, r.state, 1e-3, true));
}
BENCHMARK(BM_StepRk4Chart)->Arg(3)->Arg(8);

void BM_CouplingAnalytic(benchmark::State& st) {
  const EdgeParams p{1.0, 0.1};
  const auto gi = se2::from_pose(0.1, 0.2, 0.3);
  const auto gj = se2::from_pose(0.6, -0.1, 2.0);
  for (auto _ : st) benchmark::DoNotOptimize(coupling_force(p, gi, gj));
}
BENCHMARK(BM_CouplingAnalytic);

void BM_CouplingFiniteDifference(benchmark::State& st) {
  const EdgeParams p{1.0, 0.1};
  const auto gi = se2::from_pose(0.1, 0.2, 0.3);
  const auto gj = se2::from_pose(0.6, -0.1, 2.0);
  const auto v = [&](const se2::GroupElement& g) { return potential(p, g, gj); };
  for (auto _ : st) benchmark::DoNotOptimize(se2::body_gradient_fd(gi, v));
}
BENCHMARK(BM_CouplingFiniteDifference);

void BM_Exp(benchmark::State& st) {
  const AlgebraVector xi{0.7, 1.2, -0.4};
  for (auto _ : st) benchmark::DoNotOptimize(se2::exp(xi));
}
BENCHMARK(BM_Exp);

#ifdef SYMRED_BENCH_PRESETS
// Full 15000-step replication run, no trajectory thinning.
void BM_PaperRun(benchmark::State& st) {
  const auto cfg = cli::preset("paper-unicycles");
  const auto sys = cli::build_system(cfg);
  const auto s0 = cli::initial_state(cfg, sys);
  for (auto _ : st) benchmark::DoNotOptimize(run(sys, s0, cfg.integrator, 1));
}
BENCHMARK(BM_PaperRun)->Unit(benchmark::kMillisecond);

void BM_OracleRun(benchmark::State& st) {
  const auto cfg = cli::preset("unicycles-oracle");
  const auto sys = cli::build_system(cfg);
  const auto s0 = cli::initial_state(cfg, sys);
  for (auto _ : st) benchmark::DoNotOptimize(run(sys, s0, cfg.integrator, 1));
}
BENCHMARK(BM_OracleRun)->Unit(benchmark::kMillisecond);
#endif

}  // namespace

BENCHMARK_MAIN();
