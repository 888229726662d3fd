#include "symred/cli/scenario.hpp"

#include "symred/errors.hpp"
#include "symred/se2.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

namespace symred::cli {

namespace {

using nlohmann::json;

std::string at(const std::string& parent, std::size_t index) {
  return parent + "[" + std::to_string(index) + "]";
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ConfigError(field, "must be finite");
  return v;
}

std::vector<double> numbers(const json& j, const std::string& field) {
  if (!j.is_array()) throw ConfigError(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(number(j[k], at(field, k)));
  return out;
}

Eigen::Matrix3d matrix3(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) throw ConfigError(field, "expected a 3x3 array");
  Eigen::Matrix3d m;
  for (std::size_t r = 0; r < 3; ++r) {
    const auto row = numbers(j[r], at(field, r));
    if (row.size() != 3) throw ConfigError(at(field, r), "expected 3 entries");
    for (std::size_t c = 0; c < 3; ++c) m(Index(r), Index(c)) = row[c];
  }
  return m;
}

std::string text(const json& j, const std::string& field) {
  if (!j.is_string()) throw ConfigError(field, "expected a string");
  return j.get<std::string>();
}

// Accepts either the coefficients on the listed indices only, or all three.
Eigen::VectorXd coefficients(const json& j, const std::string& field,
                             const std::vector<Index>& support) {
  const auto v = numbers(j, field);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(3);
  if (v.size() == 3) {
    for (Index k = 0; k < 3; ++k) {
      out[k] = v[std::size_t(k)];
      const bool supported = std::find(support.begin(), support.end(), k) != support.end();
      if (!supported && out[k] != 0.0) {
        throw ConfigError(field, "entry " + std::to_string(k + 1) + " must be zero");
      }
    }
  } else if (v.size() == support.size()) {
    for (std::size_t k = 0; k < support.size(); ++k) out[support[k]] = v[k];
  } else {
    throw ConfigError(field, "expected " + std::to_string(support.size()) + " or 3 entries");
  }
  return out;
}

std::size_t agent_ref(const json& j, const std::string& field, std::size_t agents) {
  if (!j.is_number_integer()) throw ConfigError(field, "expected an agent number");
  const auto v = j.get<long long>();
  if (v < 1 || std::size_t(v) > agents) {
    throw ConfigError(field, "agent " + std::to_string(v) + " does not exist");
  }
  return std::size_t(v - 1);
}

EdgeParams edge_params(const json& j, const std::string& field, EdgeParams base) {
  if (j.contains("sigma")) base.sigma = number(j["sigma"], field + ".sigma");
  if (j.contains("d")) base.d = number(j["d"], field + ".d");
  if (!(base.sigma > 0.0)) throw ConfigError(field + ".sigma", "must be positive");
  if (!(base.d > 0.0)) throw ConfigError(field + ".d", "must be positive");
  return base;
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "euler-matrix" || name == "euler_matrix") return Method::euler_matrix;
  if (name == "lie-euler" || name == "lie_euler") return Method::lie_euler;
  if (name == "rk4" || name == "rk4_chart" || name == "rk4-chart") return Method::rk4_chart;
  throw ConfigError("integrator.method", "unknown method '" + name + "'");
}

GammaMode parse_gamma_mode(const std::string& name) {
  if (name == "oracle") return GammaMode::oracle;
  if (name == "paper") return GammaMode::paper;
  throw ConfigError("gamma_mode", "expected 'oracle' or 'paper', got '" + name + "'");
}

Formulation parse_formulation(const std::string& name) {
  if (name == "lagrangian") return Formulation::lagrangian;
  if (name == "hamiltonian") return Formulation::hamiltonian;
  throw ConfigError("formulation", "expected 'lagrangian' or 'hamiltonian', got '" + name + "'");
}

ScenarioConfig parse_config(const std::string& source) {
  json root;
  try {
    root = json::parse(source);
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("<root>", "expected an object");

  ScenarioConfig cfg;
  if (root.contains("name")) cfg.name = text(root["name"], "name");
  if (root.contains("group")) {
    cfg.group = text(root["group"], "group");
    if (cfg.group != "SE2") throw ConfigError("group", "only SE2 is supported");
  }
  if (root.contains("formulation")) {
    cfg.formulation = parse_formulation(text(root["formulation"], "formulation"));
  }

  if (!root.contains("agents")) throw ConfigError("agents", "missing");
  const json& agents = root["agents"];
  if (!agents.is_array()) throw ConfigError("agents", "expected an array");
  if (agents.empty()) throw ConfigError("agents", "at least one agent is required");
  const auto d = Decomposition::se2();
  for (std::size_t i = 0; i < agents.size(); ++i) {
    const std::string field = at("agents", i);
    const json& a = agents[i];
    if (!a.is_object()) throw ConfigError(field, "expected an object");
    AgentConfig ac;
    if (a.contains("pose") == a.contains("matrix")) {
      throw ConfigError(field, "give exactly one of 'pose' or 'matrix'");
    }
    if (a.contains("pose")) {
      const auto p = numbers(a["pose"], field + ".pose");
      if (p.size() != 3) throw ConfigError(field + ".pose", "expected [x, y, theta]");
      ac.initial_pose = se2::from_pose(p[0], p[1], p[2]).matrix();
    } else {
      ac.initial_pose = matrix3(a["matrix"], field + ".matrix");
    }
    if (a.contains("u")) {
      ac.control = AlgebraVector(coefficients(a["u"], field + ".u", d.r_indices()));
    }
    if (a.contains("lambda")) {
      ac.multiplier = DualVector(coefficients(a["lambda"], field + ".lambda", d.s_indices()));
    }
    if (a.contains("mu")) {
      ac.momentum = DualVector(coefficients(a["mu"], field + ".mu", {0, 1, 2}));
      if (ac.control || ac.multiplier) {
        throw ConfigError(field + ".mu", "cannot be combined with 'u' or 'lambda'");
      }
    }
    if (a.contains("cost_metric")) {
      ac.cost_metric = matrix3(a["cost_metric"], field + ".cost_metric");
    }
    cfg.agents.push_back(std::move(ac));
  }

  if (root.contains("graph")) {
    const json& g = root["graph"];
    if (g.is_string()) {
      if (g.get<std::string>() != "complete") {
        throw ConfigError("graph", "expected 'complete' or an edge list");
      }
    } else if (g.is_object() && g.contains("edges") && g["edges"].is_array()) {
      cfg.complete_graph = false;
      const json& edges = g["edges"];
      for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string field = at("graph.edges", k);
        if (!edges[k].is_array() || edges[k].size() != 2) {
          throw ConfigError(field, "expected [i, j]");
        }
        const auto i = agent_ref(edges[k][0], field, cfg.agents.size());
        const auto j = agent_ref(edges[k][1], field, cfg.agents.size());
        if (i == j) throw ConfigError(field, "self-loop");
        cfg.edges.emplace_back(i, j);
      }
    } else {
      throw ConfigError("graph", "expected 'complete' or {\"edges\": [...]}");
    }
  }

  if (root.contains("potential")) {
    const json& p = root["potential"];
    if (!p.is_object()) throw ConfigError("potential", "expected an object");
    cfg.edge_defaults = edge_params(p, "potential", cfg.edge_defaults);
    if (p.contains("safety_radius")) {
      cfg.safety_radius = number(p["safety_radius"], "potential.safety_radius");
      if (cfg.safety_radius < 0.0) {
        throw ConfigError("potential.safety_radius", "must be non-negative");
      }
    }
    if (p.contains("edges")) {
      const json& edges = p["edges"];
      if (!edges.is_array()) throw ConfigError("potential.edges", "expected an array");
      for (std::size_t k = 0; k < edges.size(); ++k) {
        const std::string field = at("potential.edges", k);
        const json& e = edges[k];
        if (!e.is_object() || !e.contains("between") || !e["between"].is_array() ||
            e["between"].size() != 2) {
          throw ConfigError(field, "expected {\"between\": [i, j], ...}");
        }
        EdgeOverride o;
        o.i = agent_ref(e["between"][0], field + ".between", cfg.agents.size());
        o.j = agent_ref(e["between"][1], field + ".between", cfg.agents.size());
        o.params = edge_params(e, field, cfg.edge_defaults);
        cfg.edge_overrides.push_back(o);
      }
    }
  }

  if (root.contains("cost_metric")) cfg.cost_metric = matrix3(root["cost_metric"], "cost_metric");

  if (root.contains("integrator")) {
    const json& in = root["integrator"];
    if (!in.is_object()) throw ConfigError("integrator", "expected an object");
    if (in.contains("method")) {
      cfg.integrator.method = parse_method(text(in["method"], "integrator.method"));
    }
    if (in.contains("step")) {
      cfg.integrator.step = number(in["step"], "integrator.step");
      if (!(cfg.integrator.step > 0.0)) throw ConfigError("integrator.step", "must be positive");
    }
    if (in.contains("steps")) {
      if (!in["steps"].is_number_integer() || in["steps"].get<long long>() < 1) {
        throw ConfigError("integrator.steps", "must be an integer >= 1");
      }
      cfg.integrator.steps = in["steps"].get<std::size_t>();
    }
    if (in.contains("reorthonormalize")) {
      if (!in["reorthonormalize"].is_boolean()) {
        throw ConfigError("integrator.reorthonormalize", "expected true or false");
      }
      cfg.integrator.reorthonormalize = in["reorthonormalize"].get<bool>();
    }
  }

  if (root.contains("gamma_mode")) {
    cfg.gamma_mode = parse_gamma_mode(text(root["gamma_mode"], "gamma_mode"));
  }

  if (root.contains("output")) {
    const json& o = root["output"];
    if (!o.is_object()) throw ConfigError("output", "expected an object");
    if (o.contains("dir")) cfg.output_dir = text(o["dir"], "output.dir");
    if (o.contains("stride")) {
      if (!o["stride"].is_number_integer() || o["stride"].get<long long>() < 1) {
        throw ConfigError("output.stride", "must be an integer >= 1");
      }
      cfg.stride = o["stride"].get<std::size_t>();
    }
    if (o.contains("json")) {
      if (!o["json"].is_boolean()) throw ConfigError("output.json", "expected true or false");
      cfg.write_json = o["json"].get<bool>();
    }
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::vector<std::string> preset_names() { return {"paper-unicycles", "unicycles-oracle"}; }

ScenarioConfig preset(const std::string& name) {
  if (name != "paper-unicycles" && name != "unicycles-oracle") {
    throw ConfigError("scenario", "unknown preset '" + name + "'");
  }
  const double half_sqrt2 = std::sqrt(2.0) / 2.0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // Initial poses as printed. The printed g_2 has rotation block
  // [-1/sqrt2 1/sqrt2; 1/sqrt2 -1/sqrt2], which is singular; its first column
  // (heading 3pi/4) is kept and the second completes it to a rotation.
  Eigen::Matrix3d g1, g2, g3;
  g1 << half_sqrt2, -half_sqrt2, -0.25,
        half_sqrt2, half_sqrt2, 0.0,
        0.0, 0.0, 1.0;
  g2 << -inv_sqrt2, -inv_sqrt2, 0.25,
        inv_sqrt2, -inv_sqrt2, 0.0,
        0.0, 0.0, 1.0;
  g3 << 0.0, 1.0, 0.0,
        -1.0, 0.0, std::sqrt(3.0) / 4.0,
        0.0, 0.0, 1.0;

  // Initial controls, given as the matrices e_1 u^1(0) and e_2 u^2(0).
  auto control = [](double rot01, double trans02) {
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Zero();
    rotation(0, 1) = rot01;
    rotation(1, 0) = -rot01;
    Eigen::Matrix3d translation = Eigen::Matrix3d::Zero();
    translation(0, 2) = trans02;
    return se2::vee(rotation) + se2::vee(translation);
  };

  ScenarioConfig cfg;
  cfg.name = name;
  const std::array<Eigen::Matrix3d, 3> poses{g1, g2, g3};
  const std::array<AlgebraVector, 3> controls{control(-2.5, 1.25), control(2.0, 2.0),
                                              control(-0.5, 1.0)};
  for (std::size_t i = 0; i < 3; ++i) {
    AgentConfig a;
    a.initial_pose = poses[i];
    a.control = controls[i];
    a.multiplier = DualVector::zero(3);
    cfg.agents.push_back(std::move(a));
  }
  cfg.complete_graph = true;
  cfg.edge_defaults = {1.0, 0.1};
  cfg.integrator.step = 1e-3;
  cfg.integrator.steps = 15000;

  if (name == "paper-unicycles") {
    cfg.formulation = Formulation::lagrangian;
    cfg.integrator.method = Method::euler_matrix;
    cfg.integrator.reorthonormalize = false;
    cfg.gamma_mode = GammaMode::paper;
  } else {
    cfg.formulation = Formulation::hamiltonian;
    cfg.integrator.method = Method::rk4_chart;
    cfg.integrator.reorthonormalize = true;
    cfg.gamma_mode = GammaMode::oracle;
  }
  return cfg;
}

ScenarioConfig resolve_scenario(const std::string& preset_or_path) {
  for (const auto& p : preset_names()) {
    if (p == preset_or_path) return preset(p);
  }
  return load_config(preset_or_path);
}

ReducedSystem build_system(const ScenarioConfig& cfg) {
  if (cfg.agents.empty()) throw ConfigError("agents", "at least one agent is required");
  const std::size_t r = cfg.agents.size();
  std::optional<InteractionGraph> graph;
  try {
    graph.emplace(cfg.complete_graph ? InteractionGraph::complete(r)
                                     : InteractionGraph(r, cfg.edges));
  } catch (const InputError& e) {
    throw ConfigError("graph", e.what());
  }

  std::optional<PotentialParams> params;
  try {
    params.emplace(*graph, cfg.edge_defaults, cfg.safety_radius);
  } catch (const InputError& e) {
    throw ConfigError("potential", e.what());
  }
  for (std::size_t k = 0; k < cfg.edge_overrides.size(); ++k) {
    const auto& o = cfg.edge_overrides[k];
    try {
      params->set(o.i, o.j, o.params);
    } catch (const InputError& e) {
      throw ConfigError(at("potential.edges", k), e.what());
    }
  }

  std::vector<CostMetric> metrics;
  for (std::size_t i = 0; i < r; ++i) {
    const auto& w = cfg.agents[i].cost_metric.value_or(cfg.cost_metric);
    const std::string field =
        cfg.agents[i].cost_metric ? at("agents", i) + ".cost_metric" : std::string("cost_metric");
    try {
      metrics.emplace_back(w, Decomposition::se2());
    } catch (const InputError& e) {
      throw ConfigError(field, e.what());
    }
  }

  try {
    cfg.integrator.validate();
  } catch (const InputError& e) {
    throw ConfigError("integrator", e.what());
  }

  return ReducedSystem(StructureConstants::se2(), Decomposition::se2(), std::move(metrics),
                       std::move(*graph), std::move(*params), cfg.gamma_mode);
}

MultiAgentState initial_state(const ScenarioConfig& cfg, const ReducedSystem& system) {
  MultiAgentState state{cfg.formulation, {}};
  for (std::size_t i = 0; i < cfg.agents.size(); ++i) {
    const auto& a = cfg.agents[i];
    const std::string field = at("agents", i);
    se2::GroupElement g;
    try {
      g = se2::GroupElement::from_matrix(a.initial_pose);
    } catch (const StateError& e) {
      throw ConfigError(field + ".matrix", e.what());
    }
    const CostMetric& w = system.metric(i);
    const AlgebraVector u = a.control.value_or(AlgebraVector::zero(3));
    const DualVector lambda = a.multiplier.value_or(DualVector::zero(3));
    try {
      if (cfg.formulation == Formulation::lagrangian) {
        if (a.momentum) {
          auto [u0, l0] = legendre_inverse(*a.momentum, w);
          state.agents.push_back({g, std::move(u0), std::move(l0)});
        } else {
          state.agents.push_back({g, u, lambda});
        }
      } else {
        state.agents.push_back(
            {g, AlgebraVector{}, a.momentum ? *a.momentum : legendre(u, lambda, w)});
      }
    } catch (const InputError& e) {
      throw ConfigError(field, e.what());
    }
  }
  try {
    system.validate(state);
  } catch (const InputError& e) {
    throw ConfigError("agents", e.what());
  }
  return state;
}

}  // namespace symred::cli
