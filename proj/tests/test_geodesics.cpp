#include <gtest/gtest.h>

#include <numbers>

#include "liectl/liectl.hpp"
#include "oracles.hpp"

using namespace liectl;
using namespace liectl::pauli;

namespace {

GeodesicSpec su2_spec(double theta, double c) {
  return {identity(2), c * sigma_z(), std::cos(theta) * sigma_x() + std::sin(theta) * sigma_y(), su2_pauli_pair()};
}

}  // namespace

TEST(PNorm, PauliFrameIsOrthonormal) {
  const CartanPair pair = su2_pauli_pair();
  EXPECT_NEAR(p_norm(sigma_x(), pair), 1.0, 1e-15);
  EXPECT_NEAR(p_norm(sigma_y(), pair), 1.0, 1e-15);
  EXPECT_THROW(p_norm(sigma_z(), pair), Error);
}

TEST(GeodesicSpec, Validation) {
  EXPECT_NO_THROW(validate(su2_spec(0.3, 0.5)));
  GeodesicSpec bad = su2_spec(0.3, 0.5);
  bad.a_p *= 1.1;
  EXPECT_THROW(validate(bad), Error);
  bad = su2_spec(0.3, 0.5);
  bad.a_k = sigma_x();
  EXPECT_THROW(validate(bad), Error);
  bad = su2_spec(0.3, 0.5);
  bad.x0 = identity(3);
  EXPECT_THROW(validate(bad), Error);
}

TEST(GeodesicPoint, StartsAtX0AndIsOneParameterWhenAkVanishes) {
  const GeodesicSpec s = su2_spec(0.8, 0.0);
  EXPECT_LT((geodesic_point(s, 0.0) - identity(2)).norm(), 1e-15);
  EXPECT_LT((geodesic_point(s, 1.7) - expm(1.7 * s.a_p)).norm(), 1e-14);
}

TEST(GeodesicPoint, MatchesRk4Oracle) {
  const GeodesicSpec s = su2_spec(1.2, -0.7);
  for (double t : {0.5, 1.5, 3.0}) {
    const ComplexMatrix want = oracle::geodesic_rk4(s.x0, s.a_k, s.a_p, t, 1e-3);
    EXPECT_LT((geodesic_point(s, t) - want).norm(), 1e-9);
  }
}

TEST(GeodesicPoint, LeftTranslationInvariance) {
  GeodesicSpec s = su2_spec(0.4, 1.3);
  const ComplexMatrix base = geodesic_point(s, 2.0);
  Rng rng = make_rng({4});
  const ComplexMatrix g = haar_su(2, rng);
  s.x0 = g;
  EXPECT_LT((geodesic_point(s, 2.0) - g * base).norm(), 1e-13);
}

TEST(Trajectory, HorizontalAndArclength) {
  const GeodesicSpec s = su2_spec(2.1, 0.9);
  const Trajectory traj = sample_geodesic(s, 3.0, 600);
  EXPECT_TRUE(is_horizontal(traj, s.pair, 1e-3));
  EXPECT_NEAR(horizontal_length(traj, s.pair), 3.0, 1e-4);
}

TEST(Trajectory, VerticalCurveIsNotHorizontal) {
  const CartanPair pair = su2_pauli_pair();
  Trajectory traj;
  for (int i = 0; i <= 10; ++i) {
    traj.times.push_back(0.1 * i);
    traj.points.push_back(expm(0.1 * i * sigma_z()));
  }
  EXPECT_FALSE(is_horizontal(traj, pair, 1e-3));
  EXPECT_NEAR(horizontal_length(traj, pair), 0.0, 1e-14);
}

TEST(Trajectory, ValidationAndCoarseGrid) {
  Trajectory one{{0.0}, {identity(2)}};
  EXPECT_THROW(horizontal_length(one, su2_pauli_pair()), Error);
  Trajectory unsorted{{0.0, 0.5, 0.4}, {identity(2), identity(2), identity(2)}};
  EXPECT_THROW(validate(unsorted), Error);
  // A grid too coarse for the series logarithm is refused, not misreported.
  const Trajectory coarse = sample_geodesic(su2_spec(0.0, 0.0), 3.0, 2);
  EXPECT_THROW(horizontal_length(coarse, su2_pauli_pair()), Error);
}

TEST(ClosedForm, OracleOnUnitSphereAndCZero) {
  for (double theta : {0.0, 1.0, 2.5})
    for (double c : {-1.0, 0.0, 0.4, 2.0})
      for (double t : {0.3, 1.1, 2.9}) {
        const MuNu m = su2_geodesic_closed_form(theta, c, t);
        EXPECT_NEAR(std::norm(m.mu) + std::norm(m.nu), 1.0, 1e-12);
      }
  const MuNu z = su2_geodesic_closed_form(0.6, 0.0, 1.4);
  EXPECT_LT(std::abs(z.mu - std::cos(0.7)), 1e-12);
  EXPECT_LT(std::abs(z.nu - std::exp(Complex(0.0, 0.6)) * std::sin(0.7)), 1e-12);
}

TEST(ClosedForm, FrozenOracleValue) {
  // theta = 0.7, c = 0.9, t = 1.3; computed independently with scipy.linalg.expm.
  const MuNu m = su2_geodesic_closed_form(0.7, 0.9, 1.3);
  EXPECT_NEAR(m.mu.real(), 0.8181461386933555, 1e-13);
  EXPECT_NEAR(m.mu.imag(), 0.07371739102718707, 1e-13);
  EXPECT_NEAR(m.nu.real(), 0.16077011865412663, 1e-13);
  EXPECT_NEAR(m.nu.imag(), 0.5471339972522594, 1e-13);
}

TEST(ClosedForm, LiteralAgreesExceptInTheFirstTerm) {
  for (double c : {0.0, 1.0}) {
    const MuNu o = su2_geodesic_closed_form(0.3, c, 1.7, ClosedFormVariant::Oracle);
    const MuNu l = su2_geodesic_closed_form(0.3, c, 1.7, ClosedFormVariant::Literal);
    EXPECT_LT(std::abs(o.mu - l.mu) + std::abs(o.nu - l.nu), 1e-12) << "c = " << c;
  }
  const MuNu o = su2_geodesic_closed_form(0.7, 0.9, 1.3, ClosedFormVariant::Oracle);
  const MuNu l = su2_geodesic_closed_form(0.7, 0.9, 1.3, ClosedFormVariant::Literal);
  EXPECT_NEAR(l.mu.real(), 0.7963702728377302, 1e-13);
  EXPECT_GT(std::abs(o.mu.real() - l.mu.real()), 1e-2);
  EXPECT_LT(std::abs(o.mu.imag() - l.mu.imag()), 1e-12);
  EXPECT_LT(std::abs(o.nu - l.nu), 1e-12);
}

TEST(So21, StaysInLorentzGroupAndGrows) {
  const ComplexMatrix j = lorentz_metric(2);
  const ComplexMatrix x = so21_geodesic(0.4, 0.7, 3.0);
  EXPECT_LT((x.transpose() * j * x - j).norm(), 1e-10);
  EXPECT_GT(x.cwiseAbs().maxCoeff(), 2.0);
  EXPECT_LT((so21_geodesic(0.4, 0.7, 0.0) - identity(3)).norm(), 1e-15);
}
