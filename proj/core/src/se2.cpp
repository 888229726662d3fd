#include "symred/se2.hpp"

#include "symred/errors.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>
#include <numbers>

namespace symred::se2 {

namespace {

constexpr double kSpanTolerance = 1e-12;
constexpr double kSmallAngle = 1e-6;
constexpr double kCutLocus = 1e-9;

void require(const GroupElement& g, double tolerance, const char* what) {
  if (!g.is_valid(tolerance)) {
    throw StateError(std::string(what) + ": matrix is not an SE(2) element (defect " +
                     std::to_string(g.orthogonality_defect()) + ")");
  }
}

// V(w) = [[a, -b], [b, a]] with a = sin(w)/w, b = (1 - cos(w))/w.
void left_jacobian_coeffs(double w, double& a, double& b) {
  if (std::abs(w) < kSmallAngle) {
    const double w2 = w * w;
    a = 1.0 - w2 / 6.0 + w2 * w2 / 120.0;
    b = w / 2.0 - w * w2 / 24.0 + w * w2 * w2 / 720.0;
  } else {
    a = std::sin(w) / w;
    // 1 - cos w = 2 sin^2(w/2), free of cancellation for small w.
    const double h = std::sin(0.5 * w);
    b = 2.0 * h * h / w;
  }
}

}  // namespace

GroupElement GroupElement::from_matrix(const Eigen::Matrix3d& m, double tolerance) {
  GroupElement g(m);
  if (!m.allFinite()) throw StateError("group element: non-finite entry");
  if (m(2, 0) != 0.0 || m(2, 1) != 0.0 || m(2, 2) != 1.0) {
    throw StateError("group element: bottom row must be (0, 0, 1)");
  }
  require(g, tolerance, "group element");
  return g;
}

double GroupElement::theta() const { return std::atan2(m_(1, 0), m_(0, 0)); }

double GroupElement::orthogonality_defect() const {
  const Eigen::Matrix2d r = m_.block<2, 2>(0, 0);
  return (r.transpose() * r - Eigen::Matrix2d::Identity()).norm();
}

bool GroupElement::is_valid(double tolerance) const {
  if (!m_.allFinite()) return false;
  if (m_(2, 0) != 0.0 || m_(2, 1) != 0.0 || m_(2, 2) != 1.0) return false;
  if (m_.block<2, 2>(0, 0).determinant() <= 0.0) return false;
  return orthogonality_defect() <= tolerance;
}

GroupElement from_pose(double x, double y, double theta) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(theta)) {
    throw InputError("from_pose: non-finite input");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix3d m;
  m << c, -s, x,
       s, c, y,
       0.0, 0.0, 1.0;
  return GroupElement::unchecked(m);
}

GroupElement compose(const GroupElement& g, const GroupElement& h, double tolerance) {
  require(g, tolerance, "compose lhs");
  require(h, tolerance, "compose rhs");
  Eigen::Matrix3d m = g.matrix() * h.matrix();
  m.row(2) << 0.0, 0.0, 1.0;
  return GroupElement::unchecked(m);
}

GroupElement inverse(const GroupElement& g, double tolerance) {
  require(g, tolerance, "inverse");
  const Eigen::Matrix2d rt = g.matrix().block<2, 2>(0, 0).transpose();
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  m.block<2, 2>(0, 0) = rt;
  m.block<2, 1>(0, 2) = -rt * g.position();
  return GroupElement::unchecked(m);
}

GroupElement reorthonormalize(const GroupElement& g) {
  const Eigen::Matrix2d r = g.matrix().block<2, 2>(0, 0);
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix2d u = svd.matrixU();
  const Eigen::Matrix2d v = svd.matrixV();
  if ((u * v.transpose()).determinant() < 0.0) u.col(1) = -u.col(1);
  Eigen::Matrix3d m = g.matrix();
  m.block<2, 2>(0, 0) = u * v.transpose();
  m.row(2) << 0.0, 0.0, 1.0;
  return GroupElement::unchecked(m);
}

const std::array<Eigen::Matrix3d, 3>& basis() {
  static const std::array<Eigen::Matrix3d, 3> e = [] {
    std::array<Eigen::Matrix3d, 3> b;
    b[0] << 0, -1, 0,
            1, 0, 0,
            0, 0, 0;
    b[1] << 0, 0, 1,
            0, 0, 0,
            0, 0, 0;
    b[2] << 0, 0, 0,
            0, 0, 1,
            0, 0, 0;
    return b;
  }();
  return e;
}

const std::array<Eigen::Matrix3d, 3>& dual_basis() {
  static const std::array<Eigen::Matrix3d, 3> e = [] {
    std::array<Eigen::Matrix3d, 3> b;
    b[0] << 0, 0.5, 0,
            -0.5, 0, 0,
            0, 0, 0;
    b[1] << 0, 0, 0,
            0, 0, 0,
            1, 0, 0;
    b[2] << 0, 0, 0,
            0, 0, 0,
            0, 1, 0;
    return b;
  }();
  return e;
}

Eigen::Matrix3d hat(const AlgebraVector& xi) {
  if (xi.size() != 3) throw InputError("hat: se(2) vectors have 3 coefficients");
  Eigen::Matrix3d m;
  m << 0.0, -xi[0], xi[1],
       xi[0], 0.0, xi[2],
       0.0, 0.0, 0.0;
  return m;
}

AlgebraVector vee(const Eigen::Matrix3d& x) {
  const AlgebraVector xi{x(1, 0), x(0, 2), x(1, 2)};
  if ((x - hat(xi)).cwiseAbs().maxCoeff() > kSpanTolerance) {
    throw InputError("vee: matrix is not in se(2)");
  }
  return xi;
}

GroupElement exp(const AlgebraVector& xi) {
  if (xi.size() != 3) throw InputError("exp: se(2) vectors have 3 coefficients");
  const double w = xi[0];
  double a = 0.0;
  double b = 0.0;
  left_jacobian_coeffs(w, a, b);
  const double c = std::cos(w);
  const double s = std::sin(w);
  Eigen::Matrix3d m;
  m << c, -s, a * xi[1] - b * xi[2],
       s, c, b * xi[1] + a * xi[2],
       0.0, 0.0, 1.0;
  return GroupElement::unchecked(m);
}

AlgebraVector log(const GroupElement& g) {
  require(g, kGroupTolerance, "log");
  const double w = g.theta();
  if (std::numbers::pi - std::abs(w) < kCutLocus) {
    throw DomainError("log: rotation angle is at the cut locus +-pi");
  }
  double a = 0.0;
  double b = 0.0;
  left_jacobian_coeffs(w, a, b);
  const double det = a * a + b * b;
  const Eigen::Vector2d t = g.position();
  return AlgebraVector{w, (a * t.x() + b * t.y()) / det, (-b * t.x() + a * t.y()) / det};
}

GroupElement right_multiply_exp(const GroupElement& g, const AlgebraVector& xi) {
  Eigen::Matrix3d m = g.matrix() * exp(xi).matrix();
  m.row(2) << 0.0, 0.0, 1.0;
  return GroupElement::unchecked(m);
}

DualVector body_gradient_fd(const GroupElement& g,
                            const std::function<double(const GroupElement&)>& f, double step) {
  DualVector out = DualVector::zero(3);
  for (Index k = 0; k < 3; ++k) {
    const AlgebraVector dir = AlgebraVector::unit(3, k);
    const double plus = f(right_multiply_exp(g, step * dir));
    const double minus = f(right_multiply_exp(g, -step * dir));
    out[k] = (plus - minus) / (2.0 * step);
  }
  return out;
}

DualVector body_gradient(const GroupElement& g, const ScalarFunction& f, double step) {
  if (f.gradient) return f.gradient(g);
  if (!f.value) throw InputError("body_gradient: function has no value callback");
  return body_gradient_fd(g, f.value, step);
}

}  // namespace symred::se2
