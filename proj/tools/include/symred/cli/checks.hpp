#pragma once

// Invariant suites behind `symred check`.
//
// quick: structure constants, trace pairing, ad* adjointness, commutator,
//        exp/log, decomposition verdicts, coupling-force oracle.
// full:  quick plus formulation equivalence, Hamiltonian conservation,
//        left-equivariance and the Casimir of se(2)*.

#include "symred/lie_algebra.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace symred::cli {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;      // measured defect
  double tolerance = 0.0;  // pass iff value <= tolerance
};

enum class CheckLevel { quick, full };

CheckLevel parse_check_level(const std::string& name);

/// Replaceable operations, so tests can inject a faulty implementation and
/// watch the corresponding check fail.
struct CheckHooks {
  std::function<DualVector(const StructureConstants&, const AlgebraVector&, const DualVector&)>
      ad_star = [](const StructureConstants& sc, const AlgebraVector& xi, const DualVector& mu) {
        return symred::ad_star(sc, xi, mu);
      };
};

std::vector<CheckResult> run_checks(CheckLevel level, std::uint64_t seed,
                                    const CheckHooks& hooks = {});

// Individual suites, each with its own seeded generator.
CheckResult check_antisymmetry();
CheckResult check_jacobi();
CheckResult check_trace_pairing();
CheckResult check_ad_star_adjointness(std::uint64_t seed, const CheckHooks& hooks = {});
CheckResult check_commutator_basis();
CheckResult check_commutator_random(std::uint64_t seed);
CheckResult check_exp_log(std::uint64_t seed);
CheckResult check_decomposition_se2();
CheckResult check_decomposition_rejected();
CheckResult check_decomposition_mirrored();
CheckResult check_coupling_oracle(std::uint64_t seed);
CheckResult check_coupling_invariance(std::uint64_t seed);
CheckResult check_formulation_equivalence();
CheckResult check_hamiltonian_conservation();
CheckResult check_left_equivariance(std::uint64_t seed);
CheckResult check_casimir();

/// One line per check: "PASS name value=... tolerance=...".
void print_report(const std::vector<CheckResult>& results, std::ostream& out);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace symred::cli
