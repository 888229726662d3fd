#include "symred/cli/checks.hpp"
#include "symred/cli/commands.hpp"
#include "symred/cli/scenario.hpp"
#include "symred/cli/svg_plot.hpp"
#include "symred/cli/trajectory_io.hpp"
#include "symred/errors.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

using namespace symred;
using namespace symred::cli;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() /
            (std::string("symred_") + info->test_suite_name() + "_" + info->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string config_field_of(const std::string& json_text) {
  try {
    const ScenarioConfig c = parse_config(json_text);
    const ReducedSystem sys = build_system(c);
    initial_state(c, sys);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "<no error>";
}

const char* kTwoAgents = R"({
  "formulation": "hamiltonian",
  "agents": [
    { "pose": [0, 0, 0], "mu": [1.0, 0.5, 0.1] },
    { "pose": [0.8, 0.1, 2.0], "mu": [-0.4, 0.3, 0.0] }
  ],
  "integrator": { "method": "rk4", "step": 0.001, "steps": 50 }
})";

TrajectoryRecord small_run(Formulation f, std::size_t steps = 50, std::size_t stride = 1) {
  ScenarioConfig c = preset("unicycles-oracle");
  c.formulation = f;
  c.integrator.steps = steps;
  const ReducedSystem sys = build_system(c);
  return run(sys, initial_state(c, sys), c.integrator, stride).record;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(SYMRED_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

// ---- scenario -------------------------------------------------------------

TEST(Preset, PaperUnicyclesMatchesPrintedData) {
  const ScenarioConfig c = preset("paper-unicycles");
  const double s = std::sqrt(2.0) / 2.0;
  ASSERT_EQ(c.agents.size(), 3u);

  Eigen::Matrix3d g1;
  g1 << s, -s, -0.25, s, s, 0, 0, 0, 1;
  Eigen::Matrix3d g3;
  g3 << 0, 1, 0, -1, 0, std::sqrt(3.0) / 4, 0, 0, 1;
  EXPECT_EQ(c.agents[0].initial_pose, g1);
  EXPECT_EQ(c.agents[2].initial_pose, g3);
  // Heading 3pi/4, at (1/4, 0).
  EXPECT_NEAR(std::atan2(c.agents[1].initial_pose(1, 0), c.agents[1].initial_pose(0, 0)),
              3 * std::numbers::pi / 4, 1e-15);
  EXPECT_EQ(c.agents[1].initial_pose(0, 2), 0.25);

  EXPECT_EQ(*c.agents[0].control, (AlgebraVector{2.5, 1.25, 0}));
  EXPECT_EQ(*c.agents[1].control, (AlgebraVector{-2.0, 2.0, 0}));
  EXPECT_EQ(*c.agents[2].control, (AlgebraVector{0.5, 1.0, 0}));
  for (const auto& a : c.agents) EXPECT_EQ(*a.multiplier, DualVector::zero(3));

  EXPECT_TRUE(c.complete_graph);
  EXPECT_EQ(c.edge_defaults.sigma, 1.0);
  EXPECT_EQ(c.edge_defaults.d, 0.1);
  EXPECT_EQ(c.integrator.step, 1e-3);
  EXPECT_EQ(c.integrator.steps, 15000u);
  EXPECT_EQ(c.integrator.method, Method::euler_matrix);
  EXPECT_EQ(c.gamma_mode, GammaMode::paper);
  EXPECT_EQ(c.formulation, Formulation::lagrangian);
}

TEST(Preset, EquilateralStart) {
  const ScenarioConfig c = preset("paper-unicycles");
  const ReducedSystem sys = build_system(c);
  const auto poses = initial_state(c, sys).poses();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      EXPECT_NEAR((poses[i].position() - poses[j].position()).norm(), 0.5, 1e-15);
    }
  }
}

TEST(Preset, OracleVariantIsHamiltonian) {
  const ScenarioConfig c = preset("unicycles-oracle");
  const ReducedSystem sys = build_system(c);
  const MultiAgentState s = initial_state(c, sys);
  EXPECT_EQ(s.formulation, Formulation::hamiltonian);
  EXPECT_EQ(s.agents[0].costate, (DualVector{5.0, 1.25, 0.0}));
  EXPECT_EQ(s.agents[1].costate, (DualVector{-4.0, 2.0, 0.0}));
  EXPECT_EQ(c.gamma_mode, GammaMode::oracle);
  EXPECT_EQ(c.integrator.method, Method::rk4_chart);
}

TEST(Preset, UnknownName) { EXPECT_THROW(preset("three-body"), ConfigError); }

TEST(Config, ParsesFullLayout) {
  const ScenarioConfig c = parse_config(R"({
    "name": "demo",
    "group": "SE2",
    "formulation": "lagrangian",
    "agents": [
      { "pose": [0, 0, 0], "u": [1, 2], "lambda": [0.5] },
      { "matrix": [[1, 0, 1], [0, 1, 0], [0, 0, 1]], "u": [0, 1, 0] },
      { "pose": [0, 1, 0] }
    ],
    "graph": { "edges": [[1, 2], [2, 3]] },
    "potential": { "sigma": 2, "d": 0.2, "safety_radius": 0.05,
                   "edges": [ { "between": [3, 2], "sigma": 4 } ] },
    "cost_metric": [[3, 0, 0], [0, 1, 0], [0, 0, 0]],
    "integrator": { "method": "lie-euler", "step": 0.01, "steps": 10, "reorthonormalize": false },
    "gamma_mode": "paper",
    "output": { "dir": "out", "stride": 5, "json": true }
  })");
  EXPECT_EQ(c.name, "demo");
  EXPECT_EQ(c.formulation, Formulation::lagrangian);
  EXPECT_EQ(*c.agents[0].control, (AlgebraVector{1, 2, 0}));
  EXPECT_EQ(*c.agents[0].multiplier, (DualVector{0, 0, 0.5}));
  EXPECT_EQ(c.agents[1].initial_pose(0, 2), 1.0);
  EXPECT_FALSE(c.complete_graph);
  EXPECT_EQ(c.edges.size(), 2u);
  EXPECT_EQ(c.edges[1], (InteractionGraph::Edge{1, 2}));
  EXPECT_EQ(c.edge_defaults.sigma, 2.0);
  EXPECT_EQ(c.edge_overrides[0].params.sigma, 4.0);
  EXPECT_EQ(c.edge_overrides[0].params.d, 0.2);
  EXPECT_EQ(c.cost_metric(0, 0), 3.0);
  EXPECT_EQ(c.integrator.method, Method::lie_euler);
  EXPECT_FALSE(c.integrator.reorthonormalize);
  EXPECT_EQ(c.gamma_mode, GammaMode::paper);
  EXPECT_EQ(c.stride, 5u);
  EXPECT_TRUE(c.write_json);

  const ReducedSystem sys = build_system(c);
  EXPECT_EQ(sys.params().at(1, 2).sigma, 4.0);
  EXPECT_FALSE(sys.graph().has_edge(0, 2));
}

TEST(Config, ErrorsNameTheField) {
  EXPECT_EQ(config_field_of(R"({"agents": []})"), "agents");
  EXPECT_EQ(config_field_of(R"({})"), "agents");
  EXPECT_EQ(config_field_of(R"({"agents": [{}]})"), "agents[0]");
  EXPECT_EQ(config_field_of(R"({"agents": [{"pose": [0, 0]}]})"), "agents[0].pose");
  EXPECT_EQ(config_field_of(R"({"agents": [{"pose": [0, 0, 0], "u": [1, 2, 3]}]})"),
            "agents[0].u");
  EXPECT_EQ(config_field_of(R"({"agents": [{"pose": [0, 0, 0]}], "group": "SE3"})"), "group");
  EXPECT_EQ(config_field_of(
                R"({"agents": [{"pose": [0, 0, 0]}, {"pose": [1, 0, 0]}], "graph": {"edges": [[1, 4]]}})"),
            "graph.edges[0]");
  EXPECT_EQ(config_field_of(R"({"agents": [{"pose": [0, 0, 0]}], "potential": {"d": -1}})"),
            "potential.d");
  EXPECT_EQ(config_field_of(
                R"({"agents": [{"pose": [0, 0, 0]}], "cost_metric": [[1, 0, 0], [0, -1, 0], [0, 0, 0]]})"),
            "cost_metric");
  EXPECT_EQ(config_field_of(R"({"agents": [{"matrix": [[2, 0, 0], [0, 1, 0], [0, 0, 1]]}]})"),
            "agents[0].matrix");
  EXPECT_EQ(config_field_of(R"({"agents": [{"pose": [0, 0, 0]}], "integrator": {"steps": 0}})"),
            "integrator.steps");
  EXPECT_EQ(config_field_of(R"({"agents": [{"pose": [0, 0, 0]}], "integrator": {"method": "rk5"}})"),
            "integrator.method");
  EXPECT_EQ(config_field_of("{not json"), "<root>");
  EXPECT_EQ(config_field_of(kTwoAgents), "<no error>");
}

TEST(Config, LagrangianDataMapsToMomentum) {
  ScenarioConfig c = parse_config(R"({
    "formulation": "hamiltonian",
    "agents": [ { "pose": [0, 0, 0], "u": [1.5, -0.5], "lambda": [0.25] } ]
  })");
  const ReducedSystem sys = build_system(c);
  EXPECT_EQ(initial_state(c, sys).agents[0].costate, (DualVector{3.0, -0.5, 0.25}));
}

TEST(Config, NameParsers) {
  EXPECT_EQ(parse_method("euler-matrix"), Method::euler_matrix);
  EXPECT_EQ(parse_method("rk4"), Method::rk4_chart);
  EXPECT_EQ(parse_gamma_mode("paper"), GammaMode::paper);
  EXPECT_EQ(parse_formulation("lagrangian"), Formulation::lagrangian);
  EXPECT_THROW(parse_method("midpoint"), ConfigError);
}

// ---- trajectory file --------------------------------------------------------

TEST(TrajectoryCsv, ColumnLayout) {
  EXPECT_EQ(csv_columns(Formulation::lagrangian, 1),
            (std::vector<std::string>{"t", "a1_x", "a1_y", "a1_theta", "a1_u1", "a1_u2",
                                      "a1_lambda3", "min_distance", "hamiltonian",
                                      "orthogonality_defect"}));
  EXPECT_EQ(csv_columns(Formulation::hamiltonian, 2).size(), 1u + 2 * 8 + 3);
}

TEST(TrajectoryCsv, RoundTripIsExact) {
  for (Formulation f : {Formulation::lagrangian, Formulation::hamiltonian}) {
    const TrajectoryRecord rec = small_run(f);
    std::stringstream buf;
    write_csv(rec, buf);
    const TrajectoryTable t = read_csv(buf);
    EXPECT_EQ(t.formulation, f);
    EXPECT_EQ(t.agent_count, 3u);
    ASSERT_EQ(t.rows.size(), rec.samples.size());
    const TrajectoryTable direct = to_table(rec);
    EXPECT_EQ(t.columns, direct.columns);
    EXPECT_EQ(t.rows, direct.rows);
    EXPECT_EQ(t.agent_column(2, "x").back(), rec.samples.back().poses[2].x);
  }
}

TEST(TrajectoryCsv, SeventeenDigits) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(std::strtod(format_number(std::sqrt(2.0)).c_str(), nullptr), std::sqrt(2.0));
}

TEST(TrajectoryCsv, ParseErrorsCarryLineNumbers) {
  const auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_csv(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  std::stringstream good;
  write_csv(small_run(Formulation::hamiltonian, 3), good);
  const std::string text = good.str();
  const std::string header = text.substr(0, text.find('\n') + 1);
  const std::string row = text.substr(header.size(), text.find('\n', header.size()) - header.size() + 1);

  EXPECT_EQ(line_of(""), 1u);
  EXPECT_EQ(line_of("t,a1_x\n"), 1u);
  EXPECT_EQ(line_of(header + row + "1,2,3\n"), 3u);
  std::string bad = row;
  bad.replace(0, 1, "x");
  EXPECT_EQ(line_of(header + row + row + bad), 4u);
  EXPECT_EQ(line_of(header + row), 0u);
}

TEST(TrajectoryJson, MirrorsColumns) {
  const TrajectoryRecord rec = small_run(Formulation::lagrangian, 5);
  std::stringstream buf;
  write_json(rec, buf);
  const auto j = nlohmann::json::parse(buf.str());
  EXPECT_EQ(j["formulation"], "lagrangian");
  EXPECT_EQ(j["agents"], 3);
  EXPECT_TRUE(j["completed"].get<bool>());
  EXPECT_EQ(j["columns"]["a2_lambda3"].size(), rec.samples.size());
  EXPECT_EQ(j["columns"]["t"].back().get<double>(), rec.samples.back().time);
}

// ---- plots ----------------------------------------------------------------

TEST(Svg, DeterministicAndColored) {
  const TrajectoryTable t = to_table(small_run(Formulation::hamiltonian, 200));
  for (PlotKind k : {PlotKind::xy, PlotKind::attitude, PlotKind::controls}) {
    const std::string a = render_svg(t, k);
    EXPECT_EQ(a, render_svg(t, k));
    EXPECT_EQ(a.rfind("<svg", 0), 0u);
    EXPECT_NE(a.find("stroke=\"#d62728\""), std::string::npos);  // agent 1 red
    EXPECT_NE(a.find("stroke=\"#1f77b4\""), std::string::npos);  // agent 2 blue
    EXPECT_NE(a.find("stroke=\"#2ca02c\""), std::string::npos);  // agent 3 green
    EXPECT_EQ(a.find("nan"), std::string::npos);
    EXPECT_EQ(a.find("inf"), std::string::npos);
  }
}

TEST(Svg, SingleStepIsOneSegment) {
  const TrajectoryTable t = to_table(small_run(Formulation::hamiltonian, 1));
  ASSERT_EQ(t.rows.size(), 2u);
  const std::string svg = render_svg(t, PlotKind::attitude);
  const auto start = svg.find("points=\"");
  ASSERT_NE(start, std::string::npos);
  const auto end = svg.find('"', start + 8);
  const std::string points = svg.substr(start + 8, end - start - 8);
  EXPECT_EQ(std::count(points.begin(), points.end(), ' '), 1);
}

TEST(Svg, SingleSampleAndFlatSeries) {
  TrajectoryTable t = to_table(small_run(Formulation::hamiltonian, 1));
  t.rows.resize(1);
  for (PlotKind k : {PlotKind::xy, PlotKind::attitude, PlotKind::controls}) {
    const std::string svg = render_svg(t, k);
    EXPECT_NE(svg.find("<circle"), std::string::npos);
    EXPECT_EQ(svg.find("nan"), std::string::npos);
  }
}

TEST(Svg, UnwrapAngles) {
  const double pi = std::numbers::pi;
  const auto u = unwrap_angles({3.0, -3.0, -2.5, 3.1});
  EXPECT_DOUBLE_EQ(u[0], 3.0);
  EXPECT_NEAR(u[1], 2 * pi - 3.0, 1e-15);
  EXPECT_NEAR(u[2], 2 * pi - 2.5, 1e-15);
  EXPECT_NEAR(u[3], 3.1, 1e-15);
  EXPECT_TRUE(unwrap_angles({}).empty());
}

TEST(Svg, PlotKindNames) {
  EXPECT_EQ(parse_plot_kind("controls"), PlotKind::controls);
  EXPECT_THROW(parse_plot_kind("polar"), InputError);
}

// ---- checks ---------------------------------------------------------------

TEST(Checks, QuickSuitePasses) {
  const auto results = run_checks(CheckLevel::quick, 1234);
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << " " << r.value;
}

TEST(Checks, FullSuitePasses) {
  const auto results = run_checks(CheckLevel::full, 99);
  EXPECT_GT(results.size(), run_checks(CheckLevel::quick, 99).size());
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.name << " " << r.value;
}

TEST(Checks, SignFlippedAdStarIsCaught) {
  CheckHooks hooks;
  hooks.ad_star = [](const StructureConstants& sc, const AlgebraVector& xi, const DualVector& mu) {
    return -symred::ad_star(sc, xi, mu);
  };
  EXPECT_FALSE(check_ad_star_adjointness(7, hooks).passed);
  std::ostringstream out;
  EXPECT_EQ(cmd_check(CheckLevel::quick, 7, out, hooks), 1);
  EXPECT_NE(out.str().find("FAIL ad_star_adjointness"), std::string::npos);
}

TEST(Checks, ReportFormat) {
  std::ostringstream out;
  print_report({{"alpha", true, 0.0, 1e-12}, {"beta", false, 2.0, 1.0}}, out);
  EXPECT_EQ(out.str(),
            "PASS alpha value=0.000e+00 tolerance=1.0e-12\n"
            "FAIL beta value=2.000e+00 tolerance=1.0e+00\n");
}

// ---- commands -------------------------------------------------------------

TEST(Simulate, WritesOutputsAndSummary) {
  TempDir dir;
  SimulateOptions o;
  o.scenario = "unicycles-oracle";
  o.steps = 100;
  o.stride = 10;
  o.output_dir = dir.path().string();
  o.json = true;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_simulate(o, out, err), exit_code::ok) << err.str();
  for (const char* f : {"trajectory.csv", "trajectory.json", "xy.svg", "attitude.svg", "controls.svg"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  EXPECT_NE(out.str().find("steps completed: 100 / 100"), std::string::npos);
  EXPECT_NE(out.str().find("min distance:"), std::string::npos);
  EXPECT_NE(out.str().find("hamiltonian drift:"), std::string::npos);
  EXPECT_EQ(read_csv_file((dir / "trajectory.csv").string()).rows.size(), 11u);
}

TEST(Simulate, IdenticalRunsAreByteIdentical) {
  TempDir a, b;
  SimulateOptions o;
  o.scenario = "paper-unicycles";
  o.steps = 2000;
  std::ostringstream out, err;
  o.output_dir = a.path().string();
  ASSERT_EQ(cmd_simulate(o, out, err), exit_code::ok);
  o.output_dir = b.path().string();
  ASSERT_EQ(cmd_simulate(o, out, err), exit_code::ok);
  for (const char* f : {"trajectory.csv", "xy.svg", "attitude.svg", "controls.svg"}) {
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
  }
}

TEST(Simulate, ExitCodes) {
  TempDir dir;
  std::ostringstream out, err;
  SimulateOptions o;
  o.output_dir = dir.path().string();

  write(dir / "empty.json", R"({"agents": []})");
  o.scenario = (dir / "empty.json").string();
  EXPECT_EQ(cmd_simulate(o, out, err), exit_code::config);
  EXPECT_NE(err.str().find("agents"), std::string::npos);

  write(dir / "close.json", R"({"agents": [{"pose": [0, 0, 0]}, {"pose": [0.05, 0, 0]}]})");
  o.scenario = (dir / "close.json").string();
  err.str("");
  EXPECT_EQ(cmd_simulate(o, out, err), exit_code::collision);
  EXPECT_NE(err.str().find("at step 0"), std::string::npos);

  write(dir / "blowup.json",
        R"({"agents": [{"pose": [0, 0, 0], "mu": [1e200, 1e200, 1e200]}],
            "integrator": {"steps": 3}})");
  o.scenario = (dir / "blowup.json").string();
  EXPECT_EQ(cmd_simulate(o, out, err), exit_code::numerical);

  o.scenario = (dir / "missing.json").string();
  EXPECT_EQ(cmd_simulate(o, out, err), exit_code::config);
}

TEST(Simulate, WarnsOnDisconnectedGraph) {
  TempDir dir;
  write(dir / "apart.json", R"({"agents": [{"pose": [0, 0, 0]}, {"pose": [1, 0, 0]}, {"pose": [0, 1, 0]}],
                               "graph": {"edges": [[1, 2]]}, "integrator": {"steps": 2}})");
  SimulateOptions o;
  o.scenario = (dir / "apart.json").string();
  o.output_dir = dir.path().string();
  o.plots = false;
  std::ostringstream out, err;
  EXPECT_EQ(cmd_simulate(o, out, err), exit_code::ok);
  EXPECT_NE(err.str().find("not connected"), std::string::npos);
  EXPECT_FALSE(fs::exists(dir / "xy.svg"));
}

TEST(Simulate, OverridesApply) {
  SimulateOptions o;
  o.gamma_mode = GammaMode::oracle;
  o.method = Method::rk4_chart;
  o.formulation = Formulation::hamiltonian;
  o.steps = 7;
  o.step = 0.5;
  o.stride = 3;
  const ScenarioConfig c = apply_overrides(preset("paper-unicycles"), o);
  EXPECT_EQ(c.gamma_mode, GammaMode::oracle);
  EXPECT_EQ(c.integrator.method, Method::rk4_chart);
  EXPECT_EQ(c.formulation, Formulation::hamiltonian);
  EXPECT_EQ(c.integrator.steps, 7u);
  EXPECT_EQ(c.integrator.step, 0.5);
  EXPECT_EQ(c.stride, 3u);
}

TEST(Plot, FromCsvAndMalformedInput) {
  TempDir dir;
  {
    std::ofstream f(dir / "t.csv");
    write_csv(small_run(Formulation::lagrangian, 10), f);
  }
  std::ostringstream err;
  EXPECT_EQ(cmd_plot((dir / "t.csv").string(), PlotKind::xy, (dir / "xy.svg").string(), err), 0);
  EXPECT_EQ(slurp(dir / "xy.svg"),
            render_svg(read_csv_file((dir / "t.csv").string()), PlotKind::xy));

  std::string text = slurp(dir / "t.csv");
  text += "1,2\n";
  write(dir / "bad.csv", text);
  EXPECT_EQ(cmd_plot((dir / "bad.csv").string(), PlotKind::xy, (dir / "bad.svg").string(), err), 1);
  EXPECT_NE(err.str().find("line 13"), std::string::npos) << err.str();
}

TEST(DumpAlgebra, Contents) {
  std::ostringstream out;
  EXPECT_EQ(cmd_dump_algebra(out), 0);
  const std::string s = out.str();
  EXPECT_NE(s.find("[e1,e2] = e3"), std::string::npos);
  EXPECT_NE(s.find("[e2,e3] = 0"), std::string::npos);
  EXPECT_NE(s.find("e^3"), std::string::npos);
  EXPECT_NE(s.find("C(3,1,2) = 1"), std::string::npos);
  EXPECT_NE(s.find("s = {e3}: valid"), std::string::npos);
  const auto p = s.find("tr(e^i e_j):\n");
  ASSERT_NE(p, std::string::npos);
  EXPECT_EQ(s.substr(p + 13, 3 * 26),
            "  [     1      0      0 ]\n"
            "  [     0      1      0 ]\n"
            "  [     0      0      1 ]\n");
}

// ---- executable -----------------------------------------------------------

TEST(Binary, ExitCodes) {
  TempDir dir;
  write(dir / "empty.json", R"({"agents": []})");
  write(dir / "close.json", R"({"agents": [{"pose": [0, 0, 0]}, {"pose": [0.05, 0, 0]}]})");
  const std::string out = " --out " + dir.path().string();
  EXPECT_EQ(run_binary("simulate --scenario " + (dir / "empty.json").string() + out), 1);
  EXPECT_EQ(run_binary("simulate --scenario " + (dir / "close.json").string() + out), 2);
  EXPECT_EQ(run_binary("simulate --scenario unicycles-oracle --steps 20 --integrator rk4" + out), 0);
  EXPECT_EQ(run_binary("simulate --integrator midpoint" + out), 1);
  EXPECT_EQ(run_binary("plot " + (dir / "trajectory.csv").string() + " --kind controls --out " +
                       (dir / "c.svg").string()),
            0);
  EXPECT_EQ(run_binary("dump-algebra"), 0);
  EXPECT_EQ(run_binary(""), 1);
}
