#include <gtest/gtest.h>

#include <numbers>

#include "liectl/liectl.hpp"
#include "oracles.hpp"

using namespace liectl;
using namespace liectl::pauli;

TEST(CartanBuilders, Dimensions) {
  for (int n = 2; n <= 5; ++n) {
    const CartanPair so = build_so_n1(n);
    EXPECT_EQ(so.k.dim(), n * (n - 1) / 2);
    EXPECT_EQ(so.p.dim(), n);
    EXPECT_EQ(so.h->dim(), 1);
  }
  for (int n = 2; n <= 4; ++n) {
    const CartanPair su = build_su_n(n);
    EXPECT_EQ(su.k.dim() + su.p.dim(), n * n - 1);
    EXPECT_EQ(su.h->dim(), n - 1);
  }
}

TEST(CartanBuilders, VerifyPasses) {
  for (int n = 2; n <= 5; ++n) EXPECT_TRUE(verify_cartan(build_so_n1(n), 1e-12).pass()) << "so(" << n << ",1)";
  for (int n = 2; n <= 4; ++n) EXPECT_TRUE(verify_cartan(build_su_n(n), 1e-12).pass()) << "su(" << n << ")";
  EXPECT_TRUE(verify_cartan(su2_pauli_pair(), 1e-12).pass());
}

TEST(CartanBuilders, SoN1ElementsPreserveLorentzMetric) {
  const CartanPair so = build_so_n1(3);
  for (const auto& x : so.algebra().basis()) EXPECT_LT(so_n1_defect(x), 1e-14);
}

TEST(CartanVerify, SwappedPauliPairFails) {
  // k = {sigma_x}, p = {sigma_z}: [p, k] = -sigma_y leaves p.
  const std::vector<ComplexMatrix> k{sigma_x()}, p{sigma_z()};
  const Report r = verify_cartan(make_cartan_pair(k, p), 1e-12);
  EXPECT_FALSE(r.pass());
  EXPECT_FALSE(r.find("[p,k] in p")->pass);
}

TEST(CartanVerify, OverlappingSubspacesFail) {
  const std::vector<ComplexMatrix> k{sigma_z()}, p{sigma_x(), sigma_z()};
  const Report r = verify_cartan(make_cartan_pair(k, p), 1e-12);
  EXPECT_FALSE(r.find("k_cap_p_trivial")->pass);
}

TEST(CartanVerify, NonMaximalHFails) {
  // A one-dimensional h is abelian but not maximal in p for su(3).
  const CartanPair su3 = build_su_n(3);
  const std::vector<ComplexMatrix> h{su3.h->basis().front()};
  const CartanPair partial = make_cartan_pair(su3.k.basis(), su3.p.basis(), h);
  const Report r = verify_cartan(partial, 1e-12);
  EXPECT_FALSE(r.find("h maximal abelian in p")->pass);
  EXPECT_TRUE(r.find("h abelian")->pass);
}

TEST(KakSu2, FrozenAngles) {
  const ComplexMatrix u = expm(0.3 * sigma_z()) * expm(0.7 * sigma_x()) * expm(-0.2 * sigma_z());
  const KAKFactors f = kak_su2(u);
  EXPECT_NEAR(f.angles[0], 0.3, 1e-13);
  EXPECT_NEAR(f.angles[1], 0.7, 1e-13);
  EXPECT_NEAR(f.angles[2], -0.2, 1e-13);
  EXPECT_LT(f.residual, 1e-14);
}

TEST(KakSu2, IdentityAndDegenerateCases) {
  const KAKFactors id = kak_su2(identity(2));
  EXPECT_EQ(id.angles, (std::vector<double>{0.0, 0.0, 0.0}));
  EXPECT_LT(id.residual, 1e-14);

  // nu = 0: beta = 0, gamma = 0, all phase in alpha.
  const KAKFactors diag = kak_su2(expm(1.1 * sigma_z()));
  EXPECT_NEAR(diag.angles[0], 1.1, 1e-14);
  EXPECT_EQ(diag.angles[1], 0.0);
  EXPECT_EQ(diag.angles[2], 0.0);

  // mu = 0: beta = pi, gamma = 0.
  const KAKFactors flip = kak_su2(expm(std::numbers::pi * sigma_x()));
  EXPECT_NEAR(flip.angles[1], std::numbers::pi, 1e-14);
  EXPECT_EQ(flip.angles[2], 0.0);
  EXPECT_LT(flip.residual, 1e-14);
}

TEST(KakSu2, RejectsNonUnitary) {
  ComplexMatrix m = identity(2);
  m(0, 1) = 0.5;
  try {
    kak_su2(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
  EXPECT_THROW(kak_su2(identity(3)), Error);
}

TEST(KakSu2, HaarSamples) {
  Rng rng = make_rng({5});
  for (int s = 0; s < 200; ++s) {
    const KAKFactors f = kak_su2(haar_su(2, rng));
    EXPECT_LT(f.residual, 1e-10);
    EXPECT_GE(f.angles[1], 0.0);
    EXPECT_LE(f.angles[1], std::numbers::pi);
  }
}

TEST(KakSun, FactorsAreInKAndH) {
  for (int n : {2, 3, 4, 5}) {
    const CartanPair pair = build_su_n(n);
    Rng rng = make_rng({17, static_cast<std::uint64_t>(n)});
    for (int s = 0; s < 20; ++s) {
      const ComplexMatrix u = haar_su(n, rng);
      const KAKFactors f = kak_sun(u, pair);
      EXPECT_LT(f.residual, 1e-8);
      EXPECT_LT(k_membership_defect(f.k1, pair), 1e-8);
      EXPECT_LT(k_membership_defect(f.k2, pair), 1e-8);
      EXPECT_LT(pair.h->defect(f.h_log), 1e-10);
      EXPECT_LT((expm(f.h_log) - f.a).norm(), 1e-12);
    }
  }
}

TEST(KakSun, KnownFactorization) {
  const CartanPair pair = build_su_n(3);
  Rng rng = make_rng({99});
  const ComplexMatrix k1 = haar_so(3, rng).cast<Complex>(), k2 = haar_so(3, rng).cast<Complex>();
  ComplexMatrix d = ComplexMatrix::Zero(3, 3);
  d(0, 0) = Complex(0.0, 0.4);
  d(1, 1) = Complex(0.0, -0.1);
  d(2, 2) = Complex(0.0, -0.3);
  const KAKFactors f = kak_sun(k1 * expm(d) * k2, pair);
  EXPECT_LT(f.residual, 1e-10);
  // The h part is determined up to the Weyl group and sign changes.
  std::vector<double> got{std::abs(f.h_log(0, 0).imag()), std::abs(f.h_log(1, 1).imag()), std::abs(f.h_log(2, 2).imag())};
  std::sort(got.begin(), got.end());
  EXPECT_NEAR(got[0], 0.1, 1e-10);
  EXPECT_NEAR(got[1], 0.3, 1e-10);
  EXPECT_NEAR(got[2], 0.4, 1e-10);
}

TEST(KakSun, Preconditions) {
  EXPECT_THROW(kak_sun(identity(3), build_so_n1(2)), Error);
  EXPECT_THROW(kak_sun(identity(2), build_su_n(3)), Error);
  const ComplexMatrix phase = Complex(0.0, 1.0) * identity(3);  // det = -i
  EXPECT_THROW(kak_sun(phase, build_su_n(3)), Error);
}

TEST(WeylOrbit, PermutationsWithMultiplicity) {
  const CartanPair pair = build_su_n(3);
  ComplexMatrix x = ComplexMatrix::Zero(3, 3);
  x(0, 0) = Complex(0.0, 1.0);
  x(1, 1) = Complex(0.0, 2.0);
  x(2, 2) = Complex(0.0, -3.0);
  EXPECT_EQ(weyl_orbit(x, pair).size(), 6u);
  x(1, 1) = Complex(0.0, 1.0);
  x(2, 2) = Complex(0.0, -2.0);
  EXPECT_EQ(weyl_orbit(x, pair).size(), 3u);
  EXPECT_EQ(weyl_orbit(ComplexMatrix::Zero(3, 3), pair).size(), 1u);
  EXPECT_THROW(weyl_orbit(pair.k[0], pair), Error);
}

TEST(Majorization, AgreesWithSubsetOracle) {
  Rng rng = make_rng({3});
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> lambda(4), d(4);
    double ls = 0, ds = 0;
    for (int i = 0; i < 4; ++i) {
      lambda[i] = g(rng);
      d[i] = 0.6 * g(rng);
      ls += lambda[i];
      ds += d[i];
    }
    for (int i = 0; i < 4; ++i) {
      lambda[i] -= ls / 4;
      d[i] -= ds / 4;
    }
    const bool lib = majorization_excess(d, lambda) <= 1e-12;
    const bool ref = oracle::permutohedron_excess(d, lambda) <= 1e-12;
    EXPECT_EQ(lib, ref);
  }
}

TEST(Kostant, NoViolationsAndDeterministic) {
  const CartanPair pair = build_su_n(3);
  ComplexMatrix x = ComplexMatrix::Zero(3, 3);
  x(0, 0) = Complex(0.0, 0.7);
  x(1, 1) = Complex(0.0, 0.2);
  x(2, 2) = Complex(0.0, -0.9);
  const KostantReport a = kostant_check(x, pair, 300, 11);
  const KostantReport b = kostant_check(x, pair, 300, 11);
  EXPECT_EQ(a.violations, 0);
  EXPECT_EQ(a.max_excess, b.max_excess);
  EXPECT_TRUE(a.report().pass());
  // Out-of-hull probe: a diagonal that is not majorized must be caught.
  EXPECT_GT(majorization_excess({1.0, 0.0, -1.0}, {0.7, 0.2, -0.9}), 0.1);
}

TEST(KP, SuNAndSu2AndSoN1) {
  Rng rng = make_rng({8});
  for (int n : {3, 4}) {
    const CartanPair pair = build_su_n(n);
    const KPFactors f = verify_kp_decomposition(haar_su(n, rng), pair);
    EXPECT_LT(f.residual, 1e-8);
    EXPECT_LT(f.k_defect, 1e-8);
    EXPECT_LT(f.y_defect, 1e-8);
  }
  const KPFactors s = verify_kp_decomposition(haar_su(2, rng), su2_pauli_pair());
  EXPECT_LT(s.residual, 1e-10);
  EXPECT_LT(s.y_defect, 1e-10);

  const CartanPair so = build_so_n1(3);
  RealVector c(so.algebra().dim());
  std::normal_distribution<double> g;
  for (auto& v : c) v = g(rng);
  const ComplexMatrix elem = expm(so.algebra().combine(c));
  const KPFactors l = verify_kp_decomposition(elem, so);
  EXPECT_LT(l.residual, 1e-8 * elem.norm());
  EXPECT_LT(l.k_defect, 1e-8);
  EXPECT_LT(l.y_defect, 1e-8);
  // A Lorentz element with a time-reversal is rejected.
  ComplexMatrix bad = identity(4);
  bad(3, 3) = -1.0;
  bad(0, 0) = -1.0;
  EXPECT_THROW(verify_kp_decomposition(bad, so), Error);
}

TEST(DiagonalizeInP, LandsInH) {
  const CartanPair pair = build_su_n(4);
  Rng rng = make_rng({21});
  std::normal_distribution<double> g;
  RealVector c(pair.p.dim());
  for (auto& v : c) v = g(rng);
  const PDiagonalization d = diagonalize_in_p(pair.p.combine(c), pair);
  EXPECT_LT(d.residual, 1e-10);
  EXPECT_LT(k_membership_defect(d.k, pair), 1e-10);
}
