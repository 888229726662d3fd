#include "symred/interaction.hpp"

#include "symred/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace symred {

namespace {

constexpr std::size_t kUnknownAgent = std::numeric_limits<std::size_t>::max();

InteractionGraph::Edge normalized(std::size_t i, std::size_t j) {
  return i < j ? InteractionGraph::Edge{i, j} : InteractionGraph::Edge{j, i};
}

void require_positive(const EdgeParams& p) {
  if (!(p.sigma > 0.0) || !std::isfinite(p.sigma)) {
    throw InputError("potential parameters: sigma must be positive");
  }
  if (!(p.d > 0.0) || !std::isfinite(p.d)) {
    throw InputError("potential parameters: d must be positive");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Graph

InteractionGraph::InteractionGraph(std::size_t agents, const std::vector<Edge>& edges)
    : agents_(agents), neighbors_(agents) {
  for (const auto& [a, b] : edges) {
    if (a == b) throw InputError("graph: self-loop at agent " + std::to_string(a + 1));
    if (a >= agents || b >= agents) throw InputError("graph: edge references a missing agent");
    const Edge e = normalized(a, b);
    if (std::find(edges_.begin(), edges_.end(), e) != edges_.end()) {
      throw InputError("graph: duplicate edge");
    }
    edges_.push_back(e);
    neighbors_[a].push_back(b);
    neighbors_[b].push_back(a);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto& n : neighbors_) std::sort(n.begin(), n.end());
}

InteractionGraph InteractionGraph::complete(std::size_t agents) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < agents; ++i)
    for (std::size_t j = i + 1; j < agents; ++j) edges.emplace_back(i, j);
  return InteractionGraph(agents, edges);
}

const std::vector<std::size_t>& InteractionGraph::neighbors(std::size_t i) const {
  if (i >= agents_) throw InputError("graph: agent index out of range");
  return neighbors_[i];
}

bool InteractionGraph::has_edge(std::size_t i, std::size_t j) const {
  return std::binary_search(edges_.begin(), edges_.end(), normalized(i, j));
}

bool InteractionGraph::is_connected() const {
  if (agents_ == 0) return true;
  std::vector<bool> seen(agents_, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : neighbors_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == agents_;
}

// ---------------------------------------------------------------------------
// Parameters

PotentialParams::PotentialParams(const InteractionGraph& graph, EdgeParams uniform,
                                 double safety_radius)
    : safety_radius_(safety_radius) {
  require_positive(uniform);
  if (!(safety_radius >= 0.0)) throw InputError("potential parameters: negative safety radius");
  for (const auto& e : graph.edges()) params_.emplace(e, uniform);
}

void PotentialParams::set(std::size_t i, std::size_t j, EdgeParams p) {
  require_positive(p);
  auto it = params_.find(normalized(i, j));
  if (it == params_.end()) throw InputError("potential parameters: not an edge");
  it->second = p;
}

const EdgeParams& PotentialParams::at(std::size_t i, std::size_t j) const {
  auto it = params_.find(normalized(i, j));
  if (it == params_.end()) throw InputError("potential parameters: not an edge");
  return it->second;
}

// ---------------------------------------------------------------------------
// Potentials and forces

double shell_gap(const EdgeParams& p, const GroupElement& gi, const GroupElement& gj) {
  const Eigen::Vector2d delta = gi.position() - gj.position();
  const double r2 = delta.squaredNorm();
  const double gap = r2 - p.d * p.d;
  if (!(gap > 0.0)) throw CollisionError(kUnknownAgent, kUnknownAgent, r2, p.d * p.d);
  return gap;
}

double potential(const EdgeParams& p, const GroupElement& gi, const GroupElement& gj) {
  return p.sigma / (2.0 * shell_gap(p, gi, gj));
}

DualVector coupling_force(const EdgeParams& p, const GroupElement& gi, const GroupElement& gj) {
  const double gap = shell_gap(p, gi, gj);
  const Eigen::Vector2d delta = gi.position() - gj.position();
  // dV/dp_i = -sigma delta / gap^2; along g exp(t e_k) the position moves
  // with the first (e_2) or second (e_3) column of the rotation block.
  const Eigen::Vector2d grad = -p.sigma * delta / (gap * gap);
  const auto& m = gi.matrix();
  return DualVector{0.0, grad.dot(m.block<2, 1>(0, 0)), grad.dot(m.block<2, 1>(0, 1))};
}

DualVector paper_coupling_force(const EdgeParams& p, const GroupElement& gi,
                                const GroupElement& gj) {
  const double gap = shell_gap(p, gi, gj);
  const double denom = 16.0 * gap * gap;
  const double gamma = -p.sigma * (gj.x() - gi.x()) / denom;
  const double gamma_tilde = -p.sigma * (gj.y() - gi.y()) / denom;
  return DualVector{0.0, gamma, -gamma_tilde};
}

DualVector coupling_force(GammaMode mode, const EdgeParams& p, const GroupElement& gi,
                          const GroupElement& gj) {
  return mode == GammaMode::paper ? paper_coupling_force(p, gi, gj) : coupling_force(p, gi, gj);
}

std::pair<DualVector, DualVector> gamma_split(const DualVector& force, const Decomposition& d) {
  return {project(force, d, Decomposition::Part::R), project(force, d, Decomposition::Part::S)};
}

DualVector neighbor_sum(const InteractionGraph& graph, const PotentialParams& params,
                        std::span<const GroupElement> poses, std::size_t i,
                        const EdgeEvaluator& f, Index dim) {
  if (i >= graph.agent_count() || i >= poses.size()) {
    throw InputError("neighbor_sum: agent index out of range");
  }
  DualVector sum = DualVector::zero(dim);
  for (std::size_t j : graph.neighbors(i)) {
    try {
      sum += f(params.at(i, j), poses[i], poses[j]);
    } catch (const CollisionError& e) {
      throw CollisionError(std::min(i, j), std::max(i, j), e.squared_distance(),
                           params.at(i, j).d * params.at(i, j).d);
    }
  }
  return sum;
}

double total_potential(const InteractionGraph& graph, const PotentialParams& params,
                       std::span<const GroupElement> poses) {
  double v = 0.0;
  for (const auto& [i, j] : graph.edges()) {
    try {
      v += potential(params.at(i, j), poses[i], poses[j]);
    } catch (const CollisionError& e) {
      throw CollisionError(i, j, e.squared_distance(), params.at(i, j).d * params.at(i, j).d);
    }
  }
  return v;
}

double min_pairwise_distance(std::span<const GroupElement> poses) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < poses.size(); ++i)
    for (std::size_t j = i + 1; j < poses.size(); ++j)
      best = std::min(best, (poses[i].position() - poses[j].position()).norm());
  return best;
}

}  // namespace symred
