#include "symred/cli/trajectory_io.hpp"

#include "symred/errors.hpp"

#include <json.hpp>

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace symred::cli {

namespace {

constexpr const char* kMonitorColumns[] = {"min_distance", "hamiltonian", "orthogonality_defect"};

std::vector<std::string> agent_fields(Formulation f) {
  if (f == Formulation::lagrangian) return {"x", "y", "theta", "u1", "u2", "lambda3"};
  return {"x", "y", "theta", "u1", "u2", "mu1", "mu2", "mu3"};
}

std::vector<double> row_values(const TrajectoryRecord& record, const TrajectorySample& s) {
  std::vector<double> v{s.time};
  for (std::size_t i = 0; i < record.agent_count; ++i) {
    v.push_back(s.poses[i].x);
    v.push_back(s.poses[i].y);
    v.push_back(s.poses[i].theta);
    v.push_back(s.controls[i][0]);
    v.push_back(s.controls[i][1]);
    if (record.formulation == Formulation::lagrangian) {
      v.push_back(s.costates[i][2]);
    } else {
      v.push_back(s.costates[i][0]);
      v.push_back(s.costates[i][1]);
      v.push_back(s.costates[i][2]);
    }
  }
  v.push_back(s.min_distance);
  v.push_back(s.hamiltonian);
  v.push_back(s.orthogonality_defect);
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> csv_columns(Formulation formulation, std::size_t agents) {
  std::vector<std::string> cols{"t"};
  const auto fields = agent_fields(formulation);
  for (std::size_t i = 0; i < agents; ++i) {
    for (const auto& f : fields) cols.push_back("a" + std::to_string(i + 1) + "_" + f);
  }
  for (const char* m : kMonitorColumns) cols.emplace_back(m);
  return cols;
}

std::size_t TrajectoryTable::column_index(const std::string& name) const {
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (columns[k] == name) return k;
  }
  throw InputError("trajectory: no column '" + name + "'");
}

std::vector<double> TrajectoryTable::column(const std::string& name) const {
  const std::size_t k = column_index(name);
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[k]);
  return out;
}

std::vector<double> TrajectoryTable::agent_column(std::size_t agent,
                                                  const std::string& field) const {
  return column("a" + std::to_string(agent + 1) + "_" + field);
}

void write_csv(const TrajectoryRecord& record, std::ostream& out) {
  const auto cols = csv_columns(record.formulation, record.agent_count);
  for (std::size_t k = 0; k < cols.size(); ++k) out << (k ? "," : "") << cols[k];
  out << '\n';
  for (const auto& s : record.samples) {
    const auto v = row_values(record, s);
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << format_number(v[k]);
    out << '\n';
  }
}

TrajectoryTable to_table(const TrajectoryRecord& record) {
  TrajectoryTable table;
  table.formulation = record.formulation;
  table.agent_count = record.agent_count;
  table.columns = csv_columns(record.formulation, record.agent_count);
  table.rows.reserve(record.samples.size());
  for (const auto& s : record.samples) table.rows.push_back(row_values(record, s));
  return table;
}

TrajectoryTable read_csv(std::istream& in) {
  TrajectoryTable table;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(1, "empty trajectory file");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  table.columns = split(line);

  const std::size_t n = table.columns.size();
  const std::size_t monitors = std::size(kMonitorColumns);
  if (n < 1 + monitors || table.columns.front() != "t") {
    throw ParseError(line_no, "header must start with 't' and end with the monitor columns");
  }
  const std::size_t agent_cols = n - 1 - monitors;
  bool matched = false;
  for (Formulation f : {Formulation::lagrangian, Formulation::hamiltonian}) {
    const std::size_t width = agent_fields(f).size();
    if (agent_cols % width != 0) continue;
    if (csv_columns(f, agent_cols / width) == table.columns) {
      table.formulation = f;
      table.agent_count = agent_cols / width;
      matched = true;
      break;
    }
  }
  if (!matched) throw ParseError(line_no, "unrecognized header");

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != n) {
      throw ParseError(line_no, "expected " + std::to_string(n) + " fields, found " +
                                    std::to_string(cells.size()));
    }
    std::vector<double> row;
    row.reserve(n);
    for (const auto& c : cells) {
      char* end = nullptr;
      errno = 0;
      const double v = std::strtod(c.c_str(), &end);
      if (c.empty() || end != c.c_str() + c.size() || errno == ERANGE) {
        throw ParseError(line_no, "not a number: '" + c + "'");
      }
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

TrajectoryTable read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_csv(in);
}

void write_json(const TrajectoryRecord& record, std::ostream& out) {
  nlohmann::ordered_json j;
  j["formulation"] = record.formulation == Formulation::lagrangian ? "lagrangian" : "hamiltonian";
  j["agents"] = record.agent_count;
  j["completed"] = record.completed();
  if (record.failure) {
    j["failure"] = {
        {"kind", record.failure->kind == RunFailure::Kind::collision ? "collision" : "numerical"},
        {"step", record.failure->step},
        {"time", record.failure->time},
        {"message", record.failure->message},
    };
  }
  const auto cols = csv_columns(record.formulation, record.agent_count);
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  for (const auto& c : cols) data[c] = nlohmann::ordered_json::array();
  for (const auto& s : record.samples) {
    const auto v = row_values(record, s);
    for (std::size_t k = 0; k < cols.size(); ++k) data[cols[k]].push_back(v[k]);
  }
  j["columns"] = std::move(data);
  out << j.dump(1) << '\n';
}

}  // namespace symred::cli
