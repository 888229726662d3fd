#pragma once

// Trajectory CSV
//
// Header, then one row per recorded step. Columns:
//   t
//   per agent k (1-based):
//     Lagrangian:  ak_x, ak_y, ak_theta, ak_u1, ak_u2, ak_lambda3
//     Hamiltonian: ak_x, ak_y, ak_theta, ak_u1, ak_u2, ak_mu1, ak_mu2, ak_mu3
//       (u1, u2 are the optimal controls derived from mu)
//   min_distance, hamiltonian, orthogonality_defect
// Numbers are written with 17 significant digits, so a re-parse recovers
// the recorded doubles exactly.

#include "symred/sim.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace symred::cli {

struct TrajectoryTable {
  Formulation formulation = Formulation::hamiltonian;
  std::size_t agent_count = 0;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  /// Throws InputError for an unknown column name.
  std::size_t column_index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;
  std::vector<double> agent_column(std::size_t agent, const std::string& field) const;
};

std::vector<std::string> csv_columns(Formulation formulation, std::size_t agents);

TrajectoryTable to_table(const TrajectoryRecord& record);

void write_csv(const TrajectoryRecord& record, std::ostream& out);
/// Throws ParseError with the offending line number.
TrajectoryTable read_csv(std::istream& in);
TrajectoryTable read_csv_file(const std::string& path);

/// Same data as the CSV, keyed by column name, plus the failure cause.
void write_json(const TrajectoryRecord& record, std::ostream& out);

/// printf("%.17g").
std::string format_number(double v);

}  // namespace symred::cli
