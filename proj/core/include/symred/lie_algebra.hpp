#pragma once

// Basis-level Lie algebra arithmetic.
//
// Algebra elements and coalgebra elements are coefficient vectors against a
// fixed basis {e_1..e_n} and its dual {e^1..e^n} with <e^i, e_j> = delta_ij.
// Everything here is dimension-generic; the only group-specific data is the
// StructureConstants table. Indices are 0-based: coefficient k refers to
// e_{k+1}.

#include <Eigen/Core>
#include <Eigen/Cholesky>

#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

namespace symred {

using Index = Eigen::Index;

struct AlgebraTag {};
struct DualTag {};

/// Coefficient vector tagged by the space it lives in, so that an algebra
/// element cannot be passed where a covector is expected.
template <class Tag>
class Coefficients {
 public:
  Coefficients() = default;
  explicit Coefficients(Eigen::VectorXd c) : c_(std::move(c)) {}
  Coefficients(std::initializer_list<double> values) : c_(Index(values.size())) {
    Index k = 0;
    for (double v : values) c_[k++] = v;
  }

  static Coefficients zero(Index n) { return Coefficients(Eigen::VectorXd::Zero(n)); }
  static Coefficients unit(Index n, Index k) {
    Coefficients out = zero(n);
    out.c_[k] = 1.0;
    return out;
  }

  Index size() const noexcept { return c_.size(); }
  double operator[](Index k) const { return c_[k]; }
  double& operator[](Index k) { return c_[k]; }
  const Eigen::VectorXd& coeffs() const noexcept { return c_; }
  Eigen::VectorXd& coeffs() noexcept { return c_; }

  double norm() const { return c_.norm(); }
  bool all_finite() const { return c_.allFinite(); }

  Coefficients& operator+=(const Coefficients& o) {
    c_ += o.c_;
    return *this;
  }
  Coefficients& operator-=(const Coefficients& o) {
    c_ -= o.c_;
    return *this;
  }
  Coefficients& operator*=(double s) {
    c_ *= s;
    return *this;
  }

  friend Coefficients operator+(Coefficients a, const Coefficients& b) { return a += b; }
  friend Coefficients operator-(Coefficients a, const Coefficients& b) { return a -= b; }
  friend Coefficients operator-(Coefficients a) {
    a.c_ = -a.c_;
    return a;
  }
  friend Coefficients operator*(double s, Coefficients a) { return a *= s; }
  friend Coefficients operator*(Coefficients a, double s) { return a *= s; }
  friend bool operator==(const Coefficients& a, const Coefficients& b) {
    return a.c_.size() == b.c_.size() && a.c_ == b.c_;
  }
  friend std::ostream& operator<<(std::ostream& out, const Coefficients& a) {
    const auto precision = out.precision(17);
    out << '(';
    for (Index k = 0; k < a.c_.size(); ++k) out << (k ? ", " : "") << a.c_[k];
    out << ')';
    out.precision(precision);
    return out;
  }

 private:
  Eigen::VectorXd c_;
};

/// Element of the Lie algebra (body velocities, controls).
using AlgebraVector = Coefficients<AlgebraTag>;
/// Element of the dual of the Lie algebra (momenta, costates, body forces).
using DualVector = Coefficients<DualTag>;

/// Table C with [e_i, e_j] = sum_k C(k, i, j) e_k.
///
/// Construction validates antisymmetry and the Jacobi identity to
/// `tolerance`; an invalid table throws InputError.
class StructureConstants {
 public:
  struct Bracket {
    Index i;
    Index j;
    std::vector<double> result;  // coefficients of [e_i, e_j]
  };

  /// Builds the table from the brackets [e_i, e_j] with i != j; the
  /// antisymmetric partner is filled in automatically.
  static StructureConstants from_brackets(Index n, const std::vector<Bracket>& brackets,
                                          double tolerance = 1e-12);

  /// Builds the table from a raw n*n*n array laid out as C[(k*n + i)*n + j].
  static StructureConstants from_table(Index n, std::vector<double> table,
                                       double tolerance = 1e-12);

  /// se(2) with e_1 rotation, e_2 and e_3 translations:
  /// [e_1, e_2] = e_3, [e_2, e_3] = 0, [e_3, e_1] = e_2.
  static StructureConstants se2();

  Index dim() const noexcept { return n_; }
  double operator()(Index k, Index i, Index j) const { return c_[index(k, i, j)]; }

  /// Largest |C(k,i,j) + C(k,j,i)|.
  double antisymmetry_defect() const;
  /// Largest absolute Jacobi residual over all (i, j, k, l).
  double jacobi_defect() const;

 private:
  StructureConstants(Index n, std::vector<double> table) : n_(n), c_(std::move(table)) {}
  std::size_t index(Index k, Index i, Index j) const {
    return static_cast<std::size_t>((k * n_ + i) * n_ + j);
  }
  void validate(double tolerance) const;

  Index n_ = 0;
  std::vector<double> c_;
};

/// [xi, eta]_k = sum_{i,j} C(k,i,j) xi_i eta_j.
AlgebraVector bracket(const StructureConstants& sc, const AlgebraVector& xi,
                      const AlgebraVector& eta);

/// Coadjoint operator: <ad*_xi mu, eta> = <mu, [xi, eta]>.
DualVector ad_star(const StructureConstants& sc, const AlgebraVector& xi, const DualVector& mu);

/// Natural pairing <mu, xi> = sum_k mu_k xi_k.
double pairing(const DualVector& mu, const AlgebraVector& xi);

/// Split g = r (+) s into actuated and unactuated directions.
class Decomposition {
 public:
  enum class Part { R, S };

  /// Throws InputError unless the two index sets are disjoint and cover
  /// {0..n-1}.
  Decomposition(Index n, std::vector<Index> r_indices, std::vector<Index> s_indices);

  /// r = span{e_1, e_2}, s = span{e_3}.
  static Decomposition se2();
  /// r = everything (fully actuated, s empty).
  static Decomposition full(Index n);

  Index dim() const noexcept { return n_; }
  const std::vector<Index>& r_indices() const noexcept { return r_; }
  const std::vector<Index>& s_indices() const noexcept { return s_; }
  const std::vector<Index>& indices(Part p) const { return p == Part::R ? r_ : s_; }
  bool in_r(Index k) const { return mask_[static_cast<std::size_t>(k)]; }

 private:
  Index n_;
  std::vector<Index> r_;
  std::vector<Index> s_;
  std::vector<bool> mask_;  // true on r
};

/// True iff [s,s] in s, [s,r] in r and [r,r] in s hold on basis brackets.
bool check_decomposition(const StructureConstants& sc, const Decomposition& d);

/// Zeroes every coefficient outside the selected part.
AlgebraVector project(const AlgebraVector& v, const Decomposition& d, Decomposition::Part part);
DualVector project(const DualVector& v, const Decomposition& d, Decomposition::Part part);

/// Quadratic control cost C(u) = 1/2 u^T W u with W supported on the r x r
/// block, that block symmetric positive definite.
class CostMetric {
 public:
  CostMetric(Eigen::MatrixXd weights, Decomposition decomposition);

  /// W = diag(2, 1, 0): the Gram matrix of the trace-form inner product on
  /// the se(2) actuated directions.
  static CostMetric se2_default();

  const Eigen::MatrixXd& weights() const noexcept { return w_; }
  const Decomposition& decomposition() const noexcept { return d_; }

  /// dC/du = W u. Throws InputError if u has s-components.
  DualVector gradient(const AlgebraVector& u) const;
  double cost(const AlgebraVector& u) const;

  /// Solves W_rr x_r = p_r for the r-components of p; s-components of the
  /// result are zero and those of p are ignored.
  AlgebraVector solve_r(const DualVector& p) const;

 private:
  Eigen::MatrixXd w_;
  Decomposition d_;
  Eigen::LLT<Eigen::MatrixXd> rr_factor_;
  std::optional<Eigen::VectorXd> rr_diagonal_;  // set when the actuated block is diagonal
};

DualVector cost_gradient(const CostMetric& w, const AlgebraVector& u);

/// Inverse left-trivialized differential of exp, truncated after the 1/12
/// term: the chart velocity sigma' solving g0 exp(sigma)' = g0 exp(sigma) u.
/// Accurate to O(|sigma|^3), enough for a fourth-order Munthe-Kaas step.
AlgebraVector dexp_inv(const StructureConstants& sc, const AlgebraVector& sigma,
                       const AlgebraVector& u);

}  // namespace symred
