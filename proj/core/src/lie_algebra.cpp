#include "symred/lie_algebra.hpp"

#include "symred/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace symred {

namespace {

constexpr double kSupportTolerance = 1e-12;

void require_dim(Index expected, Index actual, const char* what) {
  if (expected != actual) {
    throw InputError(std::string(what) + ": dimension " + std::to_string(actual) +
                     ", expected " + std::to_string(expected));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// StructureConstants

StructureConstants StructureConstants::from_brackets(Index n, const std::vector<Bracket>& brackets,
                                                     double tolerance) {
  if (n <= 0) throw InputError("structure constants: dimension must be positive");
  std::vector<double> table(static_cast<std::size_t>(n * n * n), 0.0);
  StructureConstants sc(n, std::move(table));
  for (const auto& b : brackets) {
    if (b.i < 0 || b.i >= n || b.j < 0 || b.j >= n) {
      throw InputError("structure constants: bracket index out of range");
    }
    if (b.i == b.j) throw InputError("structure constants: [e_i, e_i] must vanish");
    require_dim(n, Index(b.result.size()), "structure constants bracket");
    for (Index k = 0; k < n; ++k) {
      sc.c_[sc.index(k, b.i, b.j)] = b.result[static_cast<std::size_t>(k)];
      sc.c_[sc.index(k, b.j, b.i)] = -b.result[static_cast<std::size_t>(k)];
    }
  }
  sc.validate(tolerance);
  return sc;
}

StructureConstants StructureConstants::from_table(Index n, std::vector<double> table,
                                                  double tolerance) {
  if (n <= 0) throw InputError("structure constants: dimension must be positive");
  require_dim(n * n * n, Index(table.size()), "structure constants table");
  StructureConstants sc(n, std::move(table));
  sc.validate(tolerance);
  return sc;
}

StructureConstants StructureConstants::se2() {
  return from_brackets(3, {
                              {0, 1, {0.0, 0.0, 1.0}},  // [e1, e2] = e3
                              {1, 2, {0.0, 0.0, 0.0}},  // [e2, e3] = 0
                              {2, 0, {0.0, 1.0, 0.0}},  // [e3, e1] = e2
                          });
}

double StructureConstants::antisymmetry_defect() const {
  double worst = 0.0;
  for (Index k = 0; k < n_; ++k)
    for (Index i = 0; i < n_; ++i)
      for (Index j = 0; j < n_; ++j)
        worst = std::max(worst, std::abs((*this)(k, i, j) + (*this)(k, j, i)));
  return worst;
}

double StructureConstants::jacobi_defect() const {
  double worst = 0.0;
  for (Index i = 0; i < n_; ++i)
    for (Index j = 0; j < n_; ++j)
      for (Index k = 0; k < n_; ++k)
        for (Index l = 0; l < n_; ++l) {
          double s = 0.0;
          for (Index m = 0; m < n_; ++m) {
            s += (*this)(m, i, j) * (*this)(l, m, k) + (*this)(m, j, k) * (*this)(l, m, i) +
                 (*this)(m, k, i) * (*this)(l, m, j);
          }
          worst = std::max(worst, std::abs(s));
        }
  return worst;
}

void StructureConstants::validate(double tolerance) const {
  for (double c : c_) {
    if (!std::isfinite(c)) throw InputError("structure constants: non-finite entry");
  }
  if (antisymmetry_defect() > tolerance) {
    throw InputError("structure constants: table is not antisymmetric");
  }
  if (jacobi_defect() > tolerance) {
    throw InputError("structure constants: Jacobi identity fails");
  }
}

// ---------------------------------------------------------------------------
// Bracket, coadjoint action, pairing

AlgebraVector bracket(const StructureConstants& sc, const AlgebraVector& xi,
                      const AlgebraVector& eta) {
  const Index n = sc.dim();
  require_dim(n, xi.size(), "bracket lhs");
  require_dim(n, eta.size(), "bracket rhs");
  AlgebraVector out = AlgebraVector::zero(n);
  for (Index k = 0; k < n; ++k) {
    double s = 0.0;
    for (Index i = 0; i < n; ++i) {
      if (xi[i] == 0.0) continue;
      for (Index j = 0; j < n; ++j) s += sc(k, i, j) * xi[i] * eta[j];
    }
    out[k] = s;
  }
  return out;
}

DualVector ad_star(const StructureConstants& sc, const AlgebraVector& xi, const DualVector& mu) {
  const Index n = sc.dim();
  require_dim(n, xi.size(), "ad_star xi");
  require_dim(n, mu.size(), "ad_star mu");
  DualVector out = DualVector::zero(n);
  // (ad*_xi mu)_k = <mu, [xi, e_k]> = sum_{m,i} mu_m C(m,i,k) xi_i
  for (Index k = 0; k < n; ++k) {
    double s = 0.0;
    for (Index m = 0; m < n; ++m) {
      if (mu[m] == 0.0) continue;
      for (Index i = 0; i < n; ++i) s += mu[m] * sc(m, i, k) * xi[i];
    }
    out[k] = s;
  }
  return out;
}

double pairing(const DualVector& mu, const AlgebraVector& xi) {
  require_dim(mu.size(), xi.size(), "pairing");
  return mu.coeffs().dot(xi.coeffs());
}

// ---------------------------------------------------------------------------
// Decomposition

Decomposition::Decomposition(Index n, std::vector<Index> r_indices, std::vector<Index> s_indices)
    : n_(n), r_(std::move(r_indices)), s_(std::move(s_indices)),
      mask_(static_cast<std::size_t>(std::max<Index>(n, 0)), false) {
  if (n <= 0) throw InputError("decomposition: dimension must be positive");
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  auto mark = [&](const std::vector<Index>& idx, bool is_r) {
    for (Index k : idx) {
      if (k < 0 || k >= n) throw InputError("decomposition: index out of range");
      if (seen[static_cast<std::size_t>(k)]++) {
        throw InputError("decomposition: index sets overlap at " + std::to_string(k));
      }
      mask_[static_cast<std::size_t>(k)] = is_r;
    }
  };
  mark(r_, true);
  mark(s_, false);
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c == 0; })) {
    throw InputError("decomposition: index sets do not cover the algebra");
  }
  std::sort(r_.begin(), r_.end());
  std::sort(s_.begin(), s_.end());
}

Decomposition Decomposition::se2() { return Decomposition(3, {0, 1}, {2}); }

Decomposition Decomposition::full(Index n) {
  std::vector<Index> r(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) r[static_cast<std::size_t>(k)] = k;
  return Decomposition(n, std::move(r), {});
}

bool check_decomposition(const StructureConstants& sc, const Decomposition& d) {
  if (sc.dim() != d.dim()) return false;
  const Index n = sc.dim();
  // [e_a, e_b] must have no component outside the target part.
  auto lands_in = [&](Index a, Index b, bool target_is_r) {
    for (Index k = 0; k < n; ++k) {
      if (d.in_r(k) != target_is_r && std::abs(sc(k, a, b)) > kSupportTolerance) return false;
    }
    return true;
  };
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      const bool ar = d.in_r(a);
      const bool br = d.in_r(b);
      bool ok = true;
      if (!ar && !br) ok = lands_in(a, b, false);      // [s, s] in s
      else if (ar != br) ok = lands_in(a, b, true);    // [s, r] in r
      else ok = lands_in(a, b, false);                 // [r, r] in s
      if (!ok) return false;
    }
  }
  return true;
}

namespace {

template <class V>
V project_impl(const V& v, const Decomposition& d, Decomposition::Part part) {
  require_dim(d.dim(), v.size(), "project");
  V out = V::zero(v.size());
  for (Index k : d.indices(part)) out[k] = v[k];
  return out;
}

}  // namespace

AlgebraVector project(const AlgebraVector& v, const Decomposition& d, Decomposition::Part part) {
  return project_impl(v, d, part);
}

DualVector project(const DualVector& v, const Decomposition& d, Decomposition::Part part) {
  return project_impl(v, d, part);
}

// ---------------------------------------------------------------------------
// CostMetric

CostMetric::CostMetric(Eigen::MatrixXd weights, Decomposition decomposition)
    : w_(std::move(weights)), d_(std::move(decomposition)) {
  const Index n = d_.dim();
  if (w_.rows() != n || w_.cols() != n) throw InputError("cost metric: W must be n x n");
  if (!w_.allFinite()) throw InputError("cost metric: non-finite entry");
  if ((w_ - w_.transpose()).cwiseAbs().maxCoeff() > kSupportTolerance) {
    throw InputError("cost metric: W must be symmetric");
  }
  for (Index s : d_.s_indices()) {
    if (w_.row(s).cwiseAbs().maxCoeff() > 0.0 || w_.col(s).cwiseAbs().maxCoeff() > 0.0) {
      throw InputError("cost metric: W must vanish on unactuated rows and columns");
    }
  }
  const auto& r = d_.r_indices();
  const Index m = Index(r.size());
  Eigen::MatrixXd block(m, m);
  for (Index a = 0; a < m; ++a)
    for (Index b = 0; b < m; ++b) block(a, b) = w_(r[size_t(a)], r[size_t(b)]);
  if (m > 0) {
    rr_factor_.compute(block);
    if (rr_factor_.info() != Eigen::Success) {
      throw InputError("cost metric: actuated block is not positive definite");
    }
    // Entrywise division is exact to rounding, unlike the triangular solves.
    if (block.isDiagonal(0.0)) rr_diagonal_ = block.diagonal();
  }
}

CostMetric CostMetric::se2_default() {
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(3, 3);
  w(0, 0) = 2.0;
  w(1, 1) = 1.0;
  return CostMetric(std::move(w), Decomposition::se2());
}

DualVector CostMetric::gradient(const AlgebraVector& u) const {
  require_dim(d_.dim(), u.size(), "cost gradient");
  for (Index s : d_.s_indices()) {
    if (std::abs(u[s]) > kSupportTolerance) {
      throw InputError("cost gradient: control has a component on unactuated direction e" +
                       std::to_string(s + 1));
    }
  }
  return DualVector(w_ * u.coeffs());
}

double CostMetric::cost(const AlgebraVector& u) const {
  require_dim(d_.dim(), u.size(), "cost");
  return 0.5 * u.coeffs().dot(w_ * u.coeffs());
}

AlgebraVector CostMetric::solve_r(const DualVector& p) const {
  require_dim(d_.dim(), p.size(), "cost metric solve");
  const auto& r = d_.r_indices();
  AlgebraVector out = AlgebraVector::zero(d_.dim());
  if (r.empty()) return out;
  Eigen::VectorXd rhs(Index(r.size()));
  for (std::size_t a = 0; a < r.size(); ++a) rhs[Index(a)] = p[r[a]];
  const Eigen::VectorXd x =
      rr_diagonal_ ? Eigen::VectorXd(rhs.cwiseQuotient(*rr_diagonal_)) : rr_factor_.solve(rhs);
  for (std::size_t a = 0; a < r.size(); ++a) out[r[a]] = x[Index(a)];
  return out;
}

DualVector cost_gradient(const CostMetric& w, const AlgebraVector& u) { return w.gradient(u); }

AlgebraVector dexp_inv(const StructureConstants& sc, const AlgebraVector& sigma,
                       const AlgebraVector& u) {
  const AlgebraVector su = bracket(sc, sigma, u);
  return u + 0.5 * su + (1.0 / 12.0) * bracket(sc, sigma, su);
}

}  // namespace symred
