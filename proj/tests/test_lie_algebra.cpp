#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "liectl/liectl.hpp"

using namespace liectl;
using namespace liectl::pauli;

TEST(Subspace, GramIsIdentity) {
  const std::vector<ComplexMatrix> gens{sigma_x(), sigma_x() + sigma_y(), 3.0 * sigma_z()};
  const Subspace s = Subspace::of(gens);
  EXPECT_EQ(s.dim(), 3);
  EXPECT_LT(s.gram_defect(), 1e-10);
}

TEST(Subspace, ContainsIsRelative) {
  const std::vector<ComplexMatrix> gens{sigma_x()};
  const Subspace s = Subspace::of(gens);
  EXPECT_TRUE(s.contains(1e6 * sigma_x(), 1e-12));
  EXPECT_FALSE(s.contains(sigma_y(), 1e-3));
  EXPECT_NEAR(s.defect(sigma_x() + sigma_y()), sigma_y().norm(), 1e-15);
}

TEST(Subspace, DimensionMismatchThrows) {
  Subspace s(2);
  EXPECT_THROW(s.contains(identity(3), 1e-9), Error);
}

TEST(LieClosure, Examples) {
  const std::vector<ComplexMatrix> xy{sigma_x(), sigma_y()};
  const std::vector<ComplexMatrix> z{sigma_z()};
  EXPECT_EQ(lie_closure(xy, 3).dim(), 3);
  EXPECT_EQ(lie_closure(z, 3).dim(), 1);
}

TEST(LieClosure, ResultIsBracketClosed) {
  const CartanPair su4 = build_su_n(4);
  // Two generic elements generate su(4).
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  RealVector c1(su4.p.dim()), c2(su4.k.dim());
  for (auto& v : c1) v = g(rng);
  for (auto& v : c2) v = g(rng);
  const std::vector<ComplexMatrix> gens{su4.p.combine(c1), su4.k.combine(c2)};
  const Subspace alg = lie_closure(gens, 15);
  EXPECT_EQ(alg.dim(), 15);
  EXPECT_TRUE(is_bracket_closed(alg, 1e-8));
  EXPECT_LT(alg.gram_defect(), 1e-10);
}

TEST(LieClosure, SoSubalgebraStopsAtSix) {
  const CartanPair su4 = build_su_n(4);
  const Subspace alg = lie_closure(su4.k.basis(), 15);
  EXPECT_EQ(alg.dim(), 6);
}

TEST(LieClosure, Errors) {
  EXPECT_THROW(lie_closure(std::vector<ComplexMatrix>{}, 3), Error);
  ComplexMatrix bad = sigma_x();
  bad(0, 1) = std::numeric_limits<double>::infinity();
  EXPECT_THROW(lie_closure(std::vector<ComplexMatrix>{bad}, 3), Error);
  try {
    lie_closure(std::vector<ComplexMatrix>{sigma_x(), sigma_y()}, 3, kDefaultRankTol, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Diagnostics);
  }
}

TEST(ControllableRank, Verdicts) {
  EXPECT_TRUE(is_controllable_rank(std::vector<ComplexMatrix>{sigma_x(), sigma_y()}, 3));
  EXPECT_FALSE(is_controllable_rank(std::vector<ComplexMatrix>{sigma_z()}, 3));
  EXPECT_TRUE(is_controllable_rank(std::vector<ComplexMatrix>{sigma_x(), sigma_z()}, 3));
}

TEST(AdMatrix, SigmaZRotatesXY) {
  const Subspace su2 = Subspace::of(std::vector<ComplexMatrix>{sigma_x(), sigma_y(), sigma_z()});
  const RealMatrix ad = ad_matrix(sigma_z(), su2);
  // [sigma_z, sigma_x] = sigma_y, [sigma_z, sigma_y] = -sigma_x; the basis
  // is sqrt(2) * sigma_j, which does not change ad in coordinates.
  RealMatrix want(3, 3);
  want << 0, -1, 0, 1, 0, 0, 0, 0, 0;
  EXPECT_LT((ad - want).norm(), 1e-14);
  EXPECT_THROW(ad_matrix(identity(2), su2), Error);
}

TEST(Killing, MatchesTraceFormulaOnSu2AndSu3) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  for (int n : {2, 3}) {
    const CartanPair pair = build_su_n(n);
    const Subspace alg = pair.algebra();
    for (int trial = 0; trial < 5; ++trial) {
      RealVector a(alg.dim()), b(alg.dim());
      for (auto& v : a) v = g(rng);
      for (auto& v : b) v = g(rng);
      const ComplexMatrix x = alg.combine(a), y = alg.combine(b);
      EXPECT_NEAR(killing_form(x, y, alg), 2.0 * n * (x * y).trace().real(), 1e-10);
    }
  }
}

TEST(Killing, PauliValues) {
  const Subspace su2 = Subspace::of(std::vector<ComplexMatrix>{sigma_x(), sigma_y(), sigma_z()});
  // 4 Re Tr(sigma_z sigma_z) = 4 * (-1/2).
  EXPECT_NEAR(killing_form(sigma_z(), sigma_z(), su2), -2.0, 1e-14);
  EXPECT_NEAR(killing_form(sigma_x(), sigma_z(), su2), 0.0, 1e-14);
}

TEST(Killing, RejectsNonClosedBasis) {
  const Subspace xy = Subspace::of(std::vector<ComplexMatrix>{sigma_x(), sigma_y()});
  try {
    killing_form(sigma_x(), sigma_y(), xy);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

TEST(AdjointAction, QuarterTurnSendsXToY) {
  const ComplexMatrix k = expm(0.5 * std::numbers::pi * sigma_z());
  EXPECT_LT((adjoint_action(k, sigma_x()) - sigma_y()).norm(), 1e-15);
  EXPECT_EQ((adjoint_action(identity(2), sigma_x()) - sigma_x()).norm(), 0.0);
  EXPECT_THROW(adjoint_action(ComplexMatrix::Zero(2, 2), sigma_x()), Error);
}
