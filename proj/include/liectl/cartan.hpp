#pragma once

// Cartan pairs g = k + p, their verification, and the constructive group
// decompositions G = KAK and G = KP for the built-in families:
//
//   SuN      su(n) = so(n) + i*sym_0(n),  h = i*diag_0(n)
//   SoN1     so(n,1) = so(n) + border symmetric blocks,  h = one boost
//   Su2Pauli su(2) = span{sigma_z} + span{sigma_x, sigma_y},  h = span{sigma_x}
//
// The Cartan involution is implicit in each builder: X -> conj(X) for su(n),
// A -> J A J for so(n,1).

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "lie_algebra.hpp"
#include "pauli.hpp"
#include "random.hpp"
#include "report.hpp"

namespace liectl {

enum class CartanFamily { SuN, SoN1, Su2Pauli, Custom };

inline const char* to_string(CartanFamily f) {
  switch (f) {
    case CartanFamily::SuN: return "sun";
    case CartanFamily::SoN1: return "so_n1";
    case CartanFamily::Su2Pauli: return "su2";
    case CartanFamily::Custom: return "custom";
  }
  return "custom";
}

struct CartanPair {
  CartanFamily family = CartanFamily::Custom;
  Subspace k;
  Subspace p;
  std::optional<Subspace> h;
  /// p_norm(X)^2 = p_metric_scale * frobenius_inner(X, X); chosen so the
  /// family's natural p generators are unit vectors.
  double p_metric_scale = 1.0;

  Eigen::Index ambient_n() const { return k.ambient_n(); }

  /// span(k u p)
  Subspace algebra() const {
    std::vector<ComplexMatrix> all = k.basis();
    all.insert(all.end(), p.basis().begin(), p.basis().end());
    return Subspace::span(all, ambient_n());
  }
};

inline CartanPair make_cartan_pair(std::span<const ComplexMatrix> k_gens, std::span<const ComplexMatrix> p_gens,
                            std::span<const ComplexMatrix> h_gens = {}, double p_metric_scale = 1.0) {
  if (k_gens.empty() && p_gens.empty()) throw Error(ErrorKind::InvalidInput, "make_pair: both k and p are empty");
  const Eigen::Index n = k_gens.empty() ? p_gens.front().rows() : k_gens.front().rows();
  CartanPair pair{CartanFamily::Custom, Subspace::span(k_gens, n), Subspace::span(p_gens, n), std::nullopt,
                  p_metric_scale};
  if (!h_gens.empty()) pair.h = Subspace::span(h_gens, n);
  return pair;
}

namespace detail {

inline ComplexMatrix unit(Eigen::Index n, Eigen::Index i, Eigen::Index j) {
  ComplexMatrix e = ComplexMatrix::Zero(n, n);
  e(i, j) = 1.0;
  return e;
}

}  // namespace detail

/// J = diag(1, ..., 1, -1) of size n+1.
inline ComplexMatrix lorentz_metric(Eigen::Index n) {
  ComplexMatrix j = identity(n + 1);
  j(n, n) = -1.0;
  return j;
}

/// ||A^T J + J A||_F: zero exactly on so(n,1).
inline double so_n1_defect(const ComplexMatrix& a) {
  const ComplexMatrix j = lorentz_metric(a.rows() - 1);
  return (a.transpose() * j + j * a).norm();
}

inline CartanPair build_so_n1(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "build_so_n1: n must be >= 2");
  const Eigen::Index m = n + 1;
  std::vector<ComplexMatrix> k_gens, p_gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) k_gens.push_back(detail::unit(m, i, j) - detail::unit(m, j, i));
  for (int i = 0; i < n; ++i) p_gens.push_back(detail::unit(m, i, n) + detail::unit(m, n, i));
  CartanPair pair{CartanFamily::SoN1, Subspace::span(k_gens, m), Subspace::span(p_gens, m), std::nullopt, 0.5};
  pair.h = Subspace::span(std::span(p_gens).first(1), m);
  return pair;
}

inline CartanPair build_su_n(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidInput, "build_su_n: n must be >= 2");
  const Complex i_unit(0.0, 1.0);
  std::vector<ComplexMatrix> k_gens, p_gens, h_gens;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      k_gens.push_back(detail::unit(n, a, b) - detail::unit(n, b, a));
      p_gens.push_back(i_unit * (detail::unit(n, a, b) + detail::unit(n, b, a)));
    }
  for (int a = 0; a + 1 < n; ++a)
    h_gens.push_back(i_unit * (detail::unit(n, a, a) - detail::unit(n, a + 1, a + 1)));
  p_gens.insert(p_gens.end(), h_gens.begin(), h_gens.end());
  CartanPair pair{CartanFamily::SuN, Subspace::span(k_gens, n), Subspace::span(p_gens, n), Subspace::span(h_gens, n),
                  0.5};
  return pair;
}

/// k = span{sigma_z}, p = span{sigma_x, sigma_y}, h = span{sigma_x}; the
/// p-metric makes {sigma_x, sigma_y} orthonormal.
inline CartanPair su2_pauli_pair() {
  const std::array k_gens{pauli::sigma_z()};
  const std::array p_gens{pauli::sigma_x(), pauli::sigma_y()};
  const std::array h_gens{pauli::sigma_x()};
  CartanPair pair{CartanFamily::Su2Pauli, Subspace::span(k_gens, 2), Subspace::span(p_gens, 2),
                  Subspace::span(h_gens, 2), 2.0};
  return pair;
}

/// Commutation relations, k/p independence, Killing orthogonality and, when
/// h is present, h in p, h abelian and h maximal abelian in p.
inline Report verify_cartan(const CartanPair& pair, double tol) {
  Report report;
  const auto& k = pair.k;
  const auto& p = pair.p;

  std::vector<ComplexMatrix> all = k.basis();
  all.insert(all.end(), p.basis().begin(), p.basis().end());
  report.add("k_cap_p_trivial", static_cast<double>(k.dim() + p.dim() - rank_of_family(all)), 0.0);

  double kk = 0.0, pk = 0.0, pp = 0.0;
  for (int a = 0; a < k.dim(); ++a)
    for (int b = a + 1; b < k.dim(); ++b) kk = std::max(kk, k.defect(commutator(k[a], k[b])));
  for (int a = 0; a < p.dim(); ++a)
    for (int b = 0; b < k.dim(); ++b) pk = std::max(pk, p.defect(commutator(p[a], k[b])));
  for (int a = 0; a < p.dim(); ++a)
    for (int b = a + 1; b < p.dim(); ++b) pp = std::max(pp, k.defect(commutator(p[a], p[b])));
  report.add("[k,k] in k", kk, tol);
  report.add("[p,k] in p", pk, tol);
  report.add("[p,p] in k", pp, tol);

  const Subspace g = pair.algebra();
  std::vector<RealMatrix> ad_k, ad_p;
  for (const auto& x : k.basis()) ad_k.push_back(detail::ad_matrix_unchecked(x, g));
  for (const auto& x : p.basis()) ad_p.push_back(detail::ad_matrix_unchecked(x, g));
  double killing = 0.0;
  for (const auto& a : ad_k)
    for (const auto& b : ad_p) killing = std::max(killing, std::abs((a * b).trace()));
  report.add("killing_orthogonal", killing, tol);

  if (pair.h) {
    const auto& h = *pair.h;
    double in_p = 0.0, abelian = 0.0;
    for (int a = 0; a < h.dim(); ++a) {
      in_p = std::max(in_p, p.defect(h[a]));
      for (int b = a + 1; b < h.dim(); ++b) abelian = std::max(abelian, commutator(h[a], h[b]).norm());
    }
    report.add("h in p", in_p, tol);
    report.add("h abelian", abelian, tol);

    // Centralizer of h inside p: kernel of X -> ([X, h_1], ..., [X, h_r]).
    const Eigen::Index n = pair.ambient_n();
    RealMatrix map(2 * n * n * h.dim(), p.dim());
    for (int c = 0; c < p.dim(); ++c)
      for (int a = 0; a < h.dim(); ++a)
        map.block(2 * n * n * a, c, 2 * n * n, 1) = vectorize(commutator(p[c], h[a]));
    const int centralizer = p.dim() - numerical_rank(map);
    report.add("h maximal abelian in p", std::abs(static_cast<double>(centralizer - h.dim())), 0.0);
  }
  return report;
}

struct KAKFactors {
  ComplexMatrix k1;
  ComplexMatrix a;
  ComplexMatrix k2;
  ComplexMatrix h_log;         // a = expm(h_log), h_log in h
  std::vector<double> angles;  // (alpha, beta, gamma) for the su(2) Euler form
  double residual = 0.0;       // ||U - k1 a k2||_F
};

namespace detail {

inline void require_special_unitary(const ComplexMatrix& u, double tol, const char* what) {
  require_square(u, what);
  require_finite(u, what);
  if (!is_unitary(u, tol)) throw Error(ErrorKind::Precondition, std::string(what) + ": input is not unitary");
  if (std::abs(u.determinant() - 1.0) > tol)
    throw Error(ErrorKind::Precondition, std::string(what) + ": determinant is not 1");
}

}  // namespace detail

inline constexpr double kKakTieBreak = 1e-14;

/// U = exp(alpha sigma_z) exp(beta sigma_x) exp(gamma sigma_z), beta in [0, pi].
inline KAKFactors kak_su2(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw Error(ErrorKind::DimensionMismatch, "kak_su2: input must be 2x2");
  detail::require_special_unitary(u, 1e-10, "kak_su2");
  const Complex mu = u(0, 0);
  const Complex nu = u(0, 1);
  const double beta = 2.0 * std::atan2(std::abs(nu), std::abs(mu));
  double alpha = 0.0, gamma = 0.0;
  if (std::abs(nu) <= kKakTieBreak) {
    alpha = 2.0 * std::arg(mu);
  } else if (std::abs(mu) <= kKakTieBreak) {
    alpha = 2.0 * std::arg(nu);
  } else {
    alpha = std::arg(mu) + std::arg(nu);
    gamma = std::arg(mu) - std::arg(nu);
  }
  KAKFactors f;
  f.k1 = expm(alpha * pauli::sigma_z());
  f.h_log = beta * pauli::sigma_x();
  f.a = expm(f.h_log);
  f.k2 = expm(gamma * pauli::sigma_z());
  f.angles = {alpha, beta, gamma};
  f.residual = (u - f.k1 * f.a * f.k2).norm();
  return f;
}

/// U = k1 exp(iD) k2 with k1, k2 in SO(n) and D real traceless diagonal.
/// The symmetric unitary M = U U^T is diagonalized by a real orthogonal
/// matrix (its real and imaginary parts commute); exp(iD) is a square root
/// of the diagonalized M and k2 = exp(-iD) k1^T U is then real.
inline KAKFactors kak_sun(const ComplexMatrix& u, const CartanPair& pair) {
  if (pair.family != CartanFamily::SuN) throw Error(ErrorKind::Precondition, "kak_sun: pair must come from build_su_n");
  const Eigen::Index n = u.rows();
  if (n != pair.ambient_n()) throw Error(ErrorKind::DimensionMismatch, "kak_sun: matrix and pair dimensions differ");
  if (n > 8) throw Error(ErrorKind::Precondition, "kak_sun: n must be <= 8");
  detail::require_special_unitary(u, 1e-10, "kak_sun");

  ComplexMatrix m = u * u.transpose();
  m = 0.5 * (m + m.transpose()).eval();
  const RealMatrix re = m.real();
  const RealMatrix im = m.imag();

  // Generic combinations of the commuting parts share the eigenbasis.
  static constexpr double mixes[] = {0.5772156649015329, 1.4142135623730951, -0.6931471805599453,
                                     2.718281828459045,  0.3183098861837907, -1.7320508075688772};
  RealMatrix o;
  double best_offdiag = std::numeric_limits<double>::infinity();
  for (double r : mixes) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(re + r * im);
    const RealMatrix cand = es.eigenvectors();
    ComplexMatrix d = cand.transpose().cast<Complex>() * m * cand.cast<Complex>();
    d.diagonal().setZero();
    const double off = d.norm();
    if (off < best_offdiag) {
      best_offdiag = off;
      o = cand;
    }
    if (off <= 1e-11) break;
  }
  if (best_offdiag > 1e-9) {
    throw Error(ErrorKind::Degenerate, "kak_sun: could not diagonalize U U^T by a real orthogonal matrix "
                                       "(residual off-diagonal norm " + std::to_string(best_offdiag) + ")");
  }
  if (o.determinant() < 0.0) o.col(0) *= -1.0;

  const ComplexMatrix oc = o.cast<Complex>();
  const Eigen::VectorXcd d = (oc.transpose() * m * oc).diagonal();
  Eigen::VectorXd theta(n);
  for (Eigen::Index j = 0; j < n; ++j) theta[j] = 0.5 * std::arg(d[j]);

  // det exp(i theta) must be +1 so that det k2 = +1.
  const double half_turns = theta.sum() / std::numbers::pi;
  if (std::lround(half_turns) % 2 != 0) theta[0] += (theta[0] > 0.0 ? -std::numbers::pi : std::numbers::pi);
  // Make the logarithm traceless by shifting whole turns.
  long turns = std::lround(theta.sum() / (2.0 * std::numbers::pi));
  while (turns != 0) {
    Eigen::Index idx = 0;
    if (turns > 0) {
      theta.maxCoeff(&idx);
      theta[idx] -= 2.0 * std::numbers::pi;
      --turns;
    } else {
      theta.minCoeff(&idx);
      theta[idx] += 2.0 * std::numbers::pi;
      ++turns;
    }
  }

  KAKFactors f;
  f.k1 = oc;
  f.h_log = ComplexMatrix::Zero(n, n);
  f.a = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    f.h_log(j, j) = Complex(0.0, theta[j]);
    f.a(j, j) = std::exp(Complex(0.0, theta[j]));
  }
  const ComplexMatrix k2 = f.a.adjoint() * oc.transpose() * u;
  f.k2 = k2.real().cast<Complex>();
  f.residual = (u - f.k1 * f.a * f.k2).norm();
  return f;
}

/// Deviation of g from the subgroup K = exp(k) of a built-in family.
inline double k_membership_defect(const ComplexMatrix& g, const CartanPair& pair) {
  const Eigen::Index n = g.rows();
  switch (pair.family) {
    case CartanFamily::SuN: {
      const RealMatrix r = g.real();
      return g.imag().norm() + (r.transpose() * r - RealMatrix::Identity(n, n)).norm() + std::abs(r.determinant() - 1.0);
    }
    case CartanFamily::SoN1: {
      const Eigen::Index m = n - 1;
      const RealMatrix r = g.real();
      const RealMatrix block = r.topLeftCorner(m, m);
      return g.imag().norm() + r.row(m).head(m).norm() + r.col(m).head(m).norm() + std::abs(r(m, m) - 1.0) +
             (block.transpose() * block - RealMatrix::Identity(m, m)).norm() + std::abs(block.determinant() - 1.0);
    }
    case CartanFamily::Su2Pauli:
      return std::abs(g(0, 1)) + std::abs(g(1, 0)) + (g.adjoint() * g - identity(2)).norm() +
             std::abs(g.determinant() - 1.0);
    case CartanFamily::Custom: break;
  }
  throw Error(ErrorKind::Precondition, "k_membership_defect: no membership predicate for custom pairs");
}

/// Random element of K: Haar on SO(n) for SuN and SoN1, a uniform angle on
/// the circle exp(t sigma_z) for Su2Pauli, and exp of a Gaussian element of
/// k (not Haar) for custom pairs.
inline ComplexMatrix sample_k(const CartanPair& pair, Rng& rng) {
  const Eigen::Index n = pair.ambient_n();
  switch (pair.family) {
    case CartanFamily::SuN: return haar_so(n, rng).cast<Complex>();
    case CartanFamily::SoN1: {
      ComplexMatrix g = identity(n);
      g.topLeftCorner(n - 1, n - 1) = haar_so(n - 1, rng).cast<Complex>();
      return g;
    }
    case CartanFamily::Su2Pauli: {
      std::uniform_real_distribution<double> angle(0.0, 4.0 * std::numbers::pi);
      return expm(angle(rng) * pauli::sigma_z());
    }
    case CartanFamily::Custom: {
      std::normal_distribution<double> normal(0.0, std::numbers::pi);
      RealVector c(pair.k.dim());
      for (auto& v : c) v = normal(rng);
      return expm(pair.k.combine(c));
    }
  }
  return identity(n);
}

/// Weyl orbit of x in h for the su(n) pair: the distinct permutations of
/// the diagonal of x.
inline std::vector<ComplexMatrix> weyl_orbit(const ComplexMatrix& x, const CartanPair& pair) {
  if (pair.family != CartanFamily::SuN || !pair.h)
    throw Error(ErrorKind::Precondition, "weyl_orbit: only the build_su_n family is supported");
  if (x.rows() != pair.ambient_n() || !pair.h->contains(x, 1e-8))
    throw Error(ErrorKind::Precondition, "weyl_orbit: x is not in the Cartan subalgebra h");
  const Eigen::Index n = x.rows();
  std::vector<double> d(n);
  for (Eigen::Index j = 0; j < n; ++j) d[j] = x(j, j).imag();
  std::sort(d.begin(), d.end());
  // Entries within 1e-12 are the same orbit coordinate.
  for (std::size_t j = 1; j < d.size(); ++j)
    if (d[j] - d[j - 1] <= 1e-12) d[j] = d[j - 1];

  std::vector<ComplexMatrix> orbit;
  do {
    ComplexMatrix w = ComplexMatrix::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j) w(j, j) = Complex(0.0, d[j]);
    orbit.push_back(std::move(w));
  } while (std::next_permutation(d.begin(), d.end()));
  return orbit;
}

/// Amount by which `d` fails to be majorized by `lambda`: the largest excess
/// of a sorted partial sum of d over that of lambda, or of the total-sum gap.
/// Zero (or negative-free zero) means d lies in the permutohedron of lambda.
inline double majorization_excess(std::vector<double> d, std::vector<double> lambda) {
  if (d.size() != lambda.size()) throw Error(ErrorKind::DimensionMismatch, "majorization_excess: length mismatch");
  std::sort(d.rbegin(), d.rend());
  std::sort(lambda.rbegin(), lambda.rend());
  double sd = 0.0, sl = 0.0, excess = 0.0;
  for (std::size_t m = 0; m + 1 < d.size(); ++m) {
    sd += d[m];
    sl += lambda[m];
    excess = std::max(excess, sd - sl);
  }
  sd += d.back();
  sl += lambda.back();
  return std::max(excess, std::abs(sd - sl));
}

struct KostantReport {
  int samples = 0;
  int violations = 0;
  double max_excess = 0.0;
  double tol = 0.0;
  std::vector<int> violating_samples;

  Report report() const {
    Report r;
    r.entries.push_back({"hull_membership", max_excess, violations == 0});
    return r;
  }
};

/// Samples Ad_k(x) for Haar-random k in SO(n), projects onto h (the
/// diagonal) and tests membership in the convex hull of the Weyl orbit of x
/// through majorization.
inline KostantReport kostant_check(const ComplexMatrix& x, const CartanPair& pair, int samples, std::uint64_t seed,
                                   double tol = 1e-9) {
  if (samples < 1) throw Error(ErrorKind::InvalidInput, "kostant_check: samples must be >= 1");
  if (pair.family != CartanFamily::SuN || !pair.h)
    throw Error(ErrorKind::Precondition, "kostant_check: only the build_su_n family is supported");
  if (x.rows() != pair.ambient_n() || !pair.h->contains(x, 1e-8))
    throw Error(ErrorKind::Precondition, "kostant_check: x is not in the Cartan subalgebra h");

  const Eigen::Index n = x.rows();
  std::vector<double> lambda(n);
  for (Eigen::Index j = 0; j < n; ++j) lambda[j] = x(j, j).imag();

  KostantReport out;
  out.samples = samples;
  out.tol = tol;
  Rng rng = make_rng({seed});
  std::vector<double> d(n);
  for (int s = 0; s < samples; ++s) {
    const ComplexMatrix k = haar_so(n, rng).cast<Complex>();
    const ComplexMatrix y = k * x * k.transpose();
    for (Eigen::Index j = 0; j < n; ++j) d[j] = y(j, j).imag();
    const double excess = majorization_excess(d, lambda);
    out.max_excess = std::max(out.max_excess, excess);
    if (excess > tol) {
      ++out.violations;
      out.violating_samples.push_back(s);
    }
  }
  return out;
}

struct KPFactors {
  ComplexMatrix k;  // in K
  ComplexMatrix y;  // in p, g = k expm(y)
  double residual = 0.0;
  double k_defect = 0.0;
  double y_defect = 0.0;  // distance of y from p
};

/// g = k exp(Y) with k in K and Y in p.
inline KPFactors verify_kp_decomposition(const ComplexMatrix& g, const CartanPair& pair) {
  require_square(g, "verify_kp_decomposition");
  require_finite(g, "verify_kp_decomposition");
  if (g.rows() != pair.ambient_n())
    throw Error(ErrorKind::DimensionMismatch, "verify_kp_decomposition: matrix and pair dimensions differ");
  KPFactors out;
  switch (pair.family) {
    case CartanFamily::SuN: {
      const KAKFactors f = kak_sun(g, pair);
      out.k = f.k1 * f.k2;
      out.y = f.k2.transpose() * f.h_log * f.k2;
      break;
    }
    case CartanFamily::Su2Pauli: {
      const KAKFactors f = kak_su2(g);
      out.k = f.k1 * f.k2;
      out.y = f.k2.adjoint() * f.h_log * f.k2;
      break;
    }
    case CartanFamily::SoN1: {
      const Eigen::Index n = g.rows();
      const ComplexMatrix j = lorentz_metric(n - 1);
      if (g.imag().norm() > 1e-10 || (g.transpose() * j * g - j).norm() > 1e-8 * std::max(1.0, g.squaredNorm()) ||
          g(n - 1, n - 1).real() < 1.0 - 1e-10 || g.real().determinant() < 0.0) {
        throw Error(ErrorKind::Precondition, "verify_kp_decomposition: input is not in SO_0(n,1)");
      }
      const RealMatrix r = g.real();
      Eigen::SelfAdjointEigenSolver<RealMatrix> es(r.transpose() * r);
      const RealMatrix& v = es.eigenvectors();
      const Eigen::VectorXd ev = es.eigenvalues();
      const RealMatrix half_log = v * (0.5 * ev.array().log()).matrix().asDiagonal() * v.transpose();
      const RealMatrix inv_sqrt = v * ev.array().rsqrt().matrix().asDiagonal() * v.transpose();
      out.k = (r * inv_sqrt).cast<Complex>();
      out.y = half_log.cast<Complex>();
      break;
    }
    case CartanFamily::Custom:
      throw Error(ErrorKind::Precondition, "verify_kp_decomposition: custom pairs are not supported");
  }
  out.residual = (g - out.k * expm(out.y)).norm();
  out.k_defect = k_membership_defect(out.k, pair);
  out.y_defect = pair.p.defect(out.y);
  return out;
}

struct PDiagonalization {
  ComplexMatrix k;        // in SO(n)
  ComplexMatrix h_value;  // Ad_{k^T}(X), in h
  double residual = 0.0;  // distance of h_value from h
};

/// For X in p of the su(n) pair: k in SO(n) with k^T X k in h, from the real
/// symmetric eigendecomposition of -iX.
inline PDiagonalization diagonalize_in_p(const ComplexMatrix& x, const CartanPair& pair) {
  if (pair.family != CartanFamily::SuN || !pair.h)
    throw Error(ErrorKind::Precondition, "diagonalize_in_p: only the build_su_n family is supported");
  if (x.rows() != pair.ambient_n() || !pair.p.contains(x, 1e-8))
    throw Error(ErrorKind::Precondition, "diagonalize_in_p: x is not in p");
  const RealMatrix s = x.imag();
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(0.5 * (s + s.transpose()));
  RealMatrix o = es.eigenvectors();
  if (o.determinant() < 0.0) o.col(0) *= -1.0;
  PDiagonalization out;
  out.k = o.cast<Complex>();
  out.h_value = out.k.transpose() * x * out.k;
  out.residual = pair.h->defect(out.h_value);
  return out;
}

}  // namespace liectl
