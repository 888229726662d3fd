#include "oracles.hpp"

#include "symred/errors.hpp"
#include "symred/lie_algebra.hpp"

#include <gtest/gtest.h>

using namespace symred;

namespace {

AlgebraVector e(Index k) { return AlgebraVector::unit(3, k); }

AlgebraVector random_algebra(oracle::Rng& rng) {
  return {oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1)};
}

DualVector random_dual(oracle::Rng& rng) {
  return {oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1), oracle::uniform(rng, -1, 1)};
}

Eigen::Matrix3d as_matrix(const AlgebraVector& v) { return oracle::hat(v[0], v[1], v[2]); }

}  // namespace

TEST(StructureConstants, Se2Brackets) {
  const auto sc = StructureConstants::se2();
  EXPECT_EQ(bracket(sc, e(0), e(1)), e(2));
  EXPECT_EQ(bracket(sc, e(1), e(2)), AlgebraVector::zero(3));
  EXPECT_EQ(bracket(sc, e(2), e(0)), e(1));
  EXPECT_EQ(bracket(sc, e(1), e(0)), -e(2));
}

TEST(StructureConstants, Se2IsExactlyAntisymmetricAndJacobi) {
  const auto sc = StructureConstants::se2();
  EXPECT_EQ(sc.antisymmetry_defect(), 0.0);
  EXPECT_EQ(sc.jacobi_defect(), 0.0);
}

TEST(StructureConstants, MatchesMatrixCommutatorOnBasis) {
  const auto sc = StructureConstants::se2();
  const auto g = oracle::generators();
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      const Eigen::Vector3d expected = oracle::coords(g[i] * g[j] - g[j] * g[i]);
      EXPECT_EQ(bracket(sc, e(i), e(j)).coeffs(), Eigen::VectorXd(expected)) << i << "," << j;
    }
  }
}

TEST(StructureConstants, MatchesMatrixCommutatorOnRandomPairs) {
  const auto sc = StructureConstants::se2();
  oracle::Rng rng(11);
  for (int n = 0; n < 500; ++n) {
    const AlgebraVector a = random_algebra(rng);
    const AlgebraVector b = random_algebra(rng);
    const Eigen::Matrix3d ma = as_matrix(a);
    const Eigen::Matrix3d mb = as_matrix(b);
    const Eigen::Vector3d expected = oracle::coords(ma * mb - mb * ma);
    EXPECT_LE((bracket(sc, a, b).coeffs() - expected).norm(), 1e-13);
  }
}

TEST(StructureConstants, RejectsJacobiViolation) {
  // [e1,e2] = e3, [e2,e3] = e2, [e3,e1] = 0 leaves a Jacobi residual of e3.
  EXPECT_THROW(StructureConstants::from_brackets(3, {{0, 1, {0, 0, 1}}, {1, 2, {0, 1, 0}}}),
               InputError);
}

TEST(StructureConstants, RejectsNonAntisymmetricTable) {
  std::vector<double> table(27, 0.0);
  table[(2 * 3 + 0) * 3 + 1] = 1.0;  // C(3,1,2) without its partner
  EXPECT_THROW(StructureConstants::from_table(3, table), InputError);
}

TEST(StructureConstants, RejectsDiagonalBracket) {
  EXPECT_THROW(StructureConstants::from_brackets(3, {{0, 0, {0, 0, 1}}}), InputError);
}

TEST(StructureConstants, AbelianAlgebraHasZeroBrackets) {
  const auto sc = StructureConstants::from_brackets(2, {});
  const AlgebraVector a{1.0, 2.0};
  const AlgebraVector b{-3.0, 0.5};
  EXPECT_EQ(bracket(sc, a, b), AlgebraVector::zero(2));
}

TEST(AdStar, UnicycleClosedForm) {
  // ad*_u mu for u = (a, b, 0) is (-b mu3, a mu3, -a mu2).
  const auto sc = StructureConstants::se2();
  oracle::Rng rng(5);
  for (int n = 0; n < 100; ++n) {
    const double a = oracle::uniform(rng, -3, 3);
    const double b = oracle::uniform(rng, -3, 3);
    const DualVector mu = random_dual(rng);
    const DualVector got = ad_star(sc, {a, b, 0.0}, mu);
    EXPECT_NEAR(got[0], -b * mu[2], 1e-15);
    EXPECT_NEAR(got[1], a * mu[2], 1e-15);
    EXPECT_NEAR(got[2], -a * mu[1], 1e-15);
  }
}

TEST(AdStar, AdjointToBracket) {
  const auto sc = StructureConstants::se2();
  oracle::Rng rng(7);
  for (int n = 0; n < 1000; ++n) {
    const AlgebraVector xi = random_algebra(rng);
    const AlgebraVector eta = random_algebra(rng);
    const DualVector mu = random_dual(rng);
    EXPECT_LE(std::abs(pairing(ad_star(sc, xi, mu), eta) - pairing(mu, bracket(sc, xi, eta))),
              1e-12);
  }
}

TEST(AdStar, BilinearInBothArguments) {
  const auto sc = StructureConstants::se2();
  oracle::Rng rng(9);
  for (int n = 0; n < 100; ++n) {
    const AlgebraVector x = random_algebra(rng);
    const AlgebraVector y = random_algebra(rng);
    const DualVector m = random_dual(rng);
    const DualVector p = random_dual(rng);
    const double s = oracle::uniform(rng, -2, 2);
    EXPECT_LE((ad_star(sc, x + s * y, m) - ad_star(sc, x, m) - s * ad_star(sc, y, m)).norm(),
              1e-14);
    EXPECT_LE((ad_star(sc, x, m + s * p) - ad_star(sc, x, m) - s * ad_star(sc, x, p)).norm(),
              1e-14);
    const AlgebraVector z = random_algebra(rng);
    EXPECT_LE((bracket(sc, x + s * y, z) - bracket(sc, x, z) - s * bracket(sc, y, z)).norm(),
              1e-14);
  }
}

TEST(Pairing, DualBasisIsBiorthogonal) {
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      EXPECT_EQ(pairing(DualVector::unit(3, i), e(j)), i == j ? 1.0 : 0.0);
    }
  }
  EXPECT_EQ(pairing(DualVector::zero(3), AlgebraVector{1.0, 2.0, 3.0}), 0.0);
}

TEST(Decomposition, RejectsOverlapAndGaps) {
  EXPECT_THROW(Decomposition(3, {0, 1}, {1, 2}), InputError);
  EXPECT_THROW(Decomposition(3, {0}, {2}), InputError);
  EXPECT_THROW(Decomposition(3, {0, 1}, {3}), InputError);
}

TEST(Decomposition, Se2SplitIsValid) {
  EXPECT_TRUE(check_decomposition(StructureConstants::se2(), Decomposition::se2()));
}

TEST(Decomposition, RotationAloneInRIsInvalid) {
  // [e2, e1] = -e3 must lie in r = {e1}.
  EXPECT_FALSE(check_decomposition(StructureConstants::se2(), Decomposition(3, {0}, {1, 2})));
}

TEST(Decomposition, MirroredSplitIsValid) {
  // r = {e1, e3}, s = {e2}: [e1,e3] = -e2 in s, [e2,e1] = -e3 in r, [e2,e3] = 0.
  EXPECT_TRUE(check_decomposition(StructureConstants::se2(), Decomposition(3, {0, 2}, {1})));
}

TEST(Decomposition, RotationAloneInSIsValid) {
  // [e1,e2] = e3 and [e1,e3] = -e2 stay in r; [e2,e3] = 0 lies in s trivially.
  EXPECT_TRUE(check_decomposition(StructureConstants::se2(), Decomposition(3, {1, 2}, {0})));
}

TEST(Decomposition, AbelianAnySplitIsValid) {
  const auto sc = StructureConstants::from_brackets(3, {});
  EXPECT_TRUE(check_decomposition(sc, Decomposition(3, {0}, {1, 2})));
  EXPECT_TRUE(check_decomposition(sc, Decomposition(3, {2}, {0, 1})));
  EXPECT_TRUE(check_decomposition(sc, Decomposition::full(3)));
}

TEST(Project, CoordinateProjection) {
  const auto d = Decomposition::se2();
  const AlgebraVector v{1.0, 2.0, 3.0};
  EXPECT_EQ(project(v, d, Decomposition::Part::R), (AlgebraVector{1.0, 2.0, 0.0}));
  EXPECT_EQ(project(v, d, Decomposition::Part::S), (AlgebraVector{0.0, 0.0, 3.0}));
}

TEST(Project, IdempotentComplementaryLinear) {
  const auto d = Decomposition::se2();
  oracle::Rng rng(13);
  for (int n = 0; n < 50; ++n) {
    const DualVector v = random_dual(rng);
    const DualVector w = random_dual(rng);
    const auto R = Decomposition::Part::R;
    const auto S = Decomposition::Part::S;
    EXPECT_EQ(project(project(v, d, R), d, R), project(v, d, R));
    EXPECT_EQ(project(project(v, d, R), d, S), DualVector::zero(3));
    EXPECT_EQ(project(v, d, R) + project(v, d, S), v);
    EXPECT_LE((project(v + 2.0 * w, d, S) - project(v, d, S) - 2.0 * project(w, d, S)).norm(),
              1e-15);
  }
}

TEST(CostMetric, Se2GradientAndCost) {
  const auto w = CostMetric::se2_default();
  const AlgebraVector u{1.5, -0.5, 0.0};
  EXPECT_EQ(cost_gradient(w, u), (DualVector{3.0, -0.5, 0.0}));
  EXPECT_EQ(cost_gradient(w, AlgebraVector::zero(3)), DualVector::zero(3));
  EXPECT_DOUBLE_EQ(pairing(w.gradient(u), u), 2.0 * w.cost(u));
}

TEST(CostMetric, RejectsUnactuatedControl) {
  EXPECT_THROW(CostMetric::se2_default().gradient({1.0, 0.0, 0.1}), InputError);
}

TEST(CostMetric, ValidatesWeights) {
  const auto d = Decomposition::se2();
  Eigen::MatrixXd w = Eigen::Vector3d(2, 1, 0).asDiagonal();
  EXPECT_NO_THROW(CostMetric(w, d));

  Eigen::MatrixXd s_row = w;
  s_row(2, 0) = s_row(0, 2) = 0.1;
  EXPECT_THROW(CostMetric(s_row, d), InputError);

  Eigen::MatrixXd asym = w;
  asym(0, 1) = 0.3;
  EXPECT_THROW(CostMetric(asym, d), InputError);

  Eigen::MatrixXd indefinite = Eigen::Vector3d(1, -1, 0).asDiagonal();
  EXPECT_THROW(CostMetric(indefinite, d), InputError);
}

TEST(CostMetric, SolveInvertsOnR) {
  const auto w = CostMetric::se2_default();
  const AlgebraVector u = w.solve_r({4.0, 3.0, 7.0});
  EXPECT_EQ(u, (AlgebraVector{2.0, 3.0, 0.0}));
}

TEST(DexpInv, IdentityAtOrigin) {
  const auto sc = StructureConstants::se2();
  const AlgebraVector u{0.3, -1.0, 2.0};
  EXPECT_EQ(dexp_inv(sc, AlgebraVector::zero(3), u), u);
}

TEST(DexpInv, ChartVelocityReproducesBodyVelocity) {
  // d/dt exp(sigma + t s') at t = 0 must equal exp(sigma) hat(u).
  const auto sc = StructureConstants::se2();
  oracle::Rng rng(17);
  for (int n = 0; n < 20; ++n) {
    const AlgebraVector sigma = 0.01 * random_algebra(rng);
    const AlgebraVector u = random_algebra(rng);
    const AlgebraVector v = dexp_inv(sc, sigma, u);
    const double eps = 1e-5;
    const Eigen::Matrix3d lhs = (oracle::expm(as_matrix(sigma + eps * v)) -
                                 oracle::expm(as_matrix(sigma - eps * v))) /
                                (2 * eps);
    const Eigen::Matrix3d rhs = oracle::expm(as_matrix(sigma)) * as_matrix(u);
    EXPECT_LE((lhs - rhs).norm(), 1e-8);
  }
}
