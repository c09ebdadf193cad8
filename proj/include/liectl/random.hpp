#pragma once

// Seeded Haar samplers on SO(n) and SU(n).

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

#include "linalg.hpp"

namespace liectl {

using Rng = std::mt19937_64;

/// Generator seeded from a list of integers (seed, worker index, ...), so
/// derived streams are reproducible and independent of call order.
inline Rng make_rng(std::initializer_list<std::uint64_t> parts) {
  std::seed_seq seq(parts.begin(), parts.end());
  return Rng(seq);
}

/// Haar-distributed element of SO(n): QR of a Gaussian matrix with the
/// R diagonal made positive, then one column flipped if det = -1.
inline RealMatrix haar_so(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  RealMatrix g(n, n);
  for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = normal(rng);
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  const RealMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j)
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

/// Haar-distributed element of SU(n): phase-fixed QR of a complex Ginibre
/// matrix, divided by an n-th root of its determinant.
inline ComplexMatrix haar_su(Eigen::Index n, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(n, n);
  for (Eigen::Index i = 0; i < g.size(); ++i) g.data()[i] = Complex(normal(rng), normal(rng)) / std::sqrt(2.0);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < n; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  const Complex det = q.determinant();
  q /= std::pow(det, 1.0 / static_cast<double>(n));
  return q;
}

}  // namespace liectl
