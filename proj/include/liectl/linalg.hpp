#pragma once

// Dense complex matrix primitives shared by every other header: the matrix
// exponential, the bracket, the real Frobenius inner product and numerical
// rank of matrix families.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"

namespace liectl {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Relative tolerance used for numerical rank decisions unless overridden.
inline constexpr double kDefaultRankTol = 1e-9;

inline ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

inline void require_square(const ComplexMatrix& x, const char* what) {
  if (x.rows() < 1 || x.rows() != x.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " must be a non-empty square matrix, got " +
                    std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
}

inline void require_same_dim(const ComplexMatrix& x, const ComplexMatrix& y, const char* what) {
  require_square(x, what);
  require_square(y, what);
  if (x.rows() != y.rows()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + ": operand dimensions " + std::to_string(x.rows()) + " and " +
                    std::to_string(y.rows()) + " differ");
  }
}

inline bool all_finite(const ComplexMatrix& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const Complex z = x.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

inline void require_finite(const ComplexMatrix& x, const char* what) {
  if (!all_finite(x)) throw Error(ErrorKind::InvalidInput, std::string(what) + " has non-finite entries");
}

inline double frobenius_norm(const ComplexMatrix& x) { return x.norm(); }

inline bool is_anti_hermitian(const ComplexMatrix& x, double tol) {
  return x.rows() == x.cols() && (x + x.adjoint()).norm() <= tol * std::max(1.0, x.norm());
}

inline bool is_hermitian(const ComplexMatrix& x, double tol) {
  return x.rows() == x.cols() && (x - x.adjoint()).norm() <= tol * std::max(1.0, x.norm());
}

inline bool is_traceless(const ComplexMatrix& x, double tol) {
  return x.rows() == x.cols() && std::abs(x.trace()) <= tol * std::max(1.0, x.norm());
}

inline bool is_unitary(const ComplexMatrix& x, double tol) {
  return x.rows() == x.cols() && (x.adjoint() * x - identity(x.rows())).norm() <= tol;
}

/// Real coordinates of a matrix: entry (i, j) contributes its real part at
/// 2*(i*n + j) and its imaginary part at 2*(i*n + j) + 1.
inline RealVector vectorize(const ComplexMatrix& x) {
  const Eigen::Index n = x.rows();
  RealVector v(2 * x.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      const Eigen::Index k = 2 * (i * x.cols() + j);
      v[k] = x(i, j).real();
      v[k + 1] = x(i, j).imag();
    }
  }
  return v;
}

inline ComplexMatrix devectorize(const RealVector& v, Eigen::Index n) {
  if (v.size() != 2 * n * n) {
    throw Error(ErrorKind::DimensionMismatch, "devectorize: length " + std::to_string(v.size()) +
                                                  " does not match n=" + std::to_string(n));
  }
  ComplexMatrix x(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Eigen::Index k = 2 * (i * n + j);
      x(i, j) = Complex(v[k], v[k + 1]);
    }
  return x;
}

inline ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y, "commutator");
  return x * y - y * x;
}

/// Re Tr(X^dagger Y).
inline double frobenius_inner(const ComplexMatrix& x, const ComplexMatrix& y) {
  require_same_dim(x, y, "frobenius_inner");
  return (x.conjugate().cwiseProduct(y)).sum().real();
}

/// Number of singular values above tol * sigma_max. A zero matrix has rank 0.
template <typename Derived>
int numerical_rank(const Eigen::MatrixBase<Derived>& m, double tol = kDefaultRankTol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s[0] == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s[i] > tol * s[0]) ++rank;
  return rank;
}

inline int rank_of_family(std::span<const ComplexMatrix> mats, double tol = kDefaultRankTol) {
  if (mats.empty()) return 0;
  const Eigen::Index n = mats.front().rows();
  RealMatrix cols(2 * n * n, static_cast<Eigen::Index>(mats.size()));
  for (std::size_t j = 0; j < mats.size(); ++j) {
    require_square(mats[j], "rank_of_family");
    if (mats[j].rows() != n) throw Error(ErrorKind::DimensionMismatch, "rank_of_family: mixed dimensions");
    cols.col(static_cast<Eigen::Index>(j)) = vectorize(mats[j]);
  }
  return numerical_rank(cols, tol);
}

namespace detail {

// Degree-13 Pade approximant with scaling and squaring (Higham 2005).
inline ComplexMatrix expm_pade13(const ComplexMatrix& x) {
  static constexpr double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                 1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                 670442572800.0,      33522128640.0,       1323241920.0,
                                 40840800.0,          960960.0,            16380.0,
                                 182.0,               1.0};
  constexpr double theta13 = 5.371920351148152;

  const Eigen::Index n = x.rows();
  const double norm1 = x.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm1 > theta13) s = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
  const ComplexMatrix a = x / std::ldexp(1.0, s);
  const ComplexMatrix id = identity(n);

  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a4 = a2 * a2;
  const ComplexMatrix a6 = a4 * a2;
  const ComplexMatrix u_inner = a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
                                b[3] * a2 + b[1] * id;
  const ComplexMatrix u = a * u_inner;
  const ComplexMatrix v =
      a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

  ComplexMatrix r = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < s; ++i) r = r * r;
  return r;
}

// exp of an anti-Hermitian matrix K via the Hermitian eigenproblem of iK.
inline ComplexMatrix expm_anti_hermitian(const ComplexMatrix& k) {
  const ComplexMatrix h = Complex(0.0, 1.0) * k;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const Eigen::VectorXcd phases =
      es.eigenvalues().unaryExpr([](double lambda) { return std::exp(Complex(0.0, -lambda)); });
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace detail

/// Matrix exponential. Anti-Hermitian input takes the unitary
/// eigendecomposition path so the result is unitary to rounding; everything
/// else goes through scaling-and-squaring Pade.
inline ComplexMatrix expm(const ComplexMatrix& x) {
  require_square(x, "expm");
  require_finite(x, "expm argument");
  const double scale = std::max(1.0, x.norm());
  const ComplexMatrix skew = 0.5 * (x - x.adjoint());
  if ((x - skew).norm() <= 64.0 * std::numeric_limits<double>::epsilon() * scale) {
    return detail::expm_anti_hermitian(skew);
  }
  return detail::expm_pade13(x);
}

/// Principal logarithm of a matrix close to the identity, by the Mercator
/// series of log(I + E). Requires ||E||_F <= max_distance (< 1).
inline ComplexMatrix logm_near_identity(const ComplexMatrix& g, double max_distance = 0.5) {
  require_square(g, "logm_near_identity");
  require_finite(g, "logm_near_identity argument");
  const ComplexMatrix e = g - identity(g.rows());
  const double dist = e.norm();
  if (dist > max_distance) {
    throw Error(ErrorKind::Precondition, "logarithm step too large (||G - I||_F = " + std::to_string(dist) +
                                             "); use a finer grid");
  }
  ComplexMatrix result = ComplexMatrix::Zero(g.rows(), g.cols());
  ComplexMatrix power = e;
  for (int k = 1; k < 200; ++k) {
    const ComplexMatrix term = power / static_cast<double>(k);
    if (k % 2 == 1)
      result += term;
    else
      result -= term;
    if (term.norm() <= 1e-18 * std::max(1.0, result.norm())) break;
    power = power * e;
  }
  return result;
}

}  // namespace liectl
