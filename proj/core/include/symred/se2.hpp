#pragma once

// SE(2) as 3x3 homogeneous matrices
//
//   g = [ cos t  -sin t  x ]
//       [ sin t   cos t  y ]
//       [   0       0    1 ]
//
// with the se(2) basis e_1 (rotation), e_2 (body-x translation) and e_3
// (body-y translation). Coefficient vectors use the ordering (w, v1, v2).

#include "symred/lie_algebra.hpp"

#include <Eigen/Core>

#include <array>
#include <functional>

namespace symred::se2 {

/// Default tolerance on ||R^T R - I||_F for a matrix to count as an element.
inline constexpr double kGroupTolerance = 1e-9;

struct Pose {
  double x = 0.0;      // m
  double y = 0.0;      // m
  double theta = 0.0;  // rad, in (-pi, pi]
};

class GroupElement {
 public:
  /// Identity.
  GroupElement() : m_(Eigen::Matrix3d::Identity()) {}

  /// Validated construction: bottom row exactly (0, 0, 1), rotation block
  /// orthogonal to `tolerance` with positive determinant. Throws StateError.
  static GroupElement from_matrix(const Eigen::Matrix3d& m, double tolerance = kGroupTolerance);

  /// Wraps a matrix without any check. Used by the entrywise Euler update,
  /// which lets the rotation block drift off SO(2).
  static GroupElement unchecked(const Eigen::Matrix3d& m) { return GroupElement(m); }

  const Eigen::Matrix3d& matrix() const noexcept { return m_; }
  double x() const { return m_(0, 2); }
  double y() const { return m_(1, 2); }
  /// atan2 of the first rotation column.
  double theta() const;
  Eigen::Vector2d position() const { return m_.block<2, 1>(0, 2); }
  Pose pose() const { return {x(), y(), theta()}; }

  /// ||R^T R - I||_F of the rotation block.
  double orthogonality_defect() const;
  bool is_valid(double tolerance = kGroupTolerance) const;

 private:
  explicit GroupElement(const Eigen::Matrix3d& m) : m_(m) {}
  Eigen::Matrix3d m_;
};

/// Throws InputError for non-finite input.
GroupElement from_pose(double x, double y, double theta);
inline GroupElement from_pose(const Pose& p) { return from_pose(p.x, p.y, p.theta); }

/// Left translation g h. Inputs must satisfy the group invariants to
/// `tolerance` (StateError otherwise).
GroupElement compose(const GroupElement& g, const GroupElement& h,
                     double tolerance = kGroupTolerance);
/// Closed form (R^T, -R^T t).
GroupElement inverse(const GroupElement& g, double tolerance = kGroupTolerance);

/// Nearest element in SE(2): the rotation block is replaced by its polar
/// factor. Translation is left unchanged.
GroupElement reorthonormalize(const GroupElement& g);

/// Basis matrices e_1, e_2, e_3.
const std::array<Eigen::Matrix3d, 3>& basis();
/// Dual basis matrices e^1, e^2, e^3 with tr(e^i e_j) = delta_ij.
const std::array<Eigen::Matrix3d, 3>& dual_basis();

/// sum_k xi_k e_k.
Eigen::Matrix3d hat(const AlgebraVector& xi);
/// Inverse of hat; throws InputError if X is farther than 1e-12 from the span.
AlgebraVector vee(const Eigen::Matrix3d& x);

/// Closed-form exponential; series expansion for |w| < 1e-6.
GroupElement exp(const AlgebraVector& xi);
/// Inverse of exp on |theta| < pi. Throws DomainError within 1e-9 of the
/// cut locus and StateError for matrices outside the group.
AlgebraVector log(const GroupElement& g);

/// Right-multiplication by exp(xi) without validating g (works on drifted
/// matrices too).
GroupElement right_multiply_exp(const GroupElement& g, const AlgebraVector& xi);

/// Scalar function on the group with an optional analytic body gradient.
struct ScalarFunction {
  std::function<double(const GroupElement&)> value;
  std::function<DualVector(const GroupElement&)> gradient;  // may be empty
};

/// Left-trivialized differential: component k = d/dt F(g exp(t e_k)) at 0.
/// Uses the analytic hook when present, central differences otherwise.
DualVector body_gradient(const GroupElement& g, const ScalarFunction& f, double step = 1e-6);

/// Central-difference body gradient; ignores any analytic hook.
DualVector body_gradient_fd(const GroupElement& g,
                            const std::function<double(const GroupElement&)>& f,
                            double step = 1e-6);

}  // namespace symred::se2
