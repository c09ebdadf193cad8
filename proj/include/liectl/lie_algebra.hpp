#pragma once

// Real matrix subspaces, Lie closure, the bracket-generating (rank) test for
// controllability, adjoint representation and the Killing form.
//
// Generators are anti-Hermitian matrices (Omega = -iH); callers holding
// Hermitian Hamiltonians convert before calling in.

#include <cmath>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"

namespace liectl {

/// A real linear subspace of n x n complex matrices, stored as a basis that
/// is orthonormal under frobenius_inner.
class Subspace {
 public:
  explicit Subspace(Eigen::Index ambient_n) : ambient_n_(ambient_n), coords_(2 * ambient_n * ambient_n, 0) {
    if (ambient_n < 1) throw Error(ErrorKind::InvalidInput, "Subspace: ambient dimension must be >= 1");
  }

  /// Orthonormalized span of `mats`; members whose residual after
  /// projection is below tol * ||member|| are dropped as dependent.
  static Subspace span(std::span<const ComplexMatrix> mats, Eigen::Index ambient_n,
                       double tol = kDefaultRankTol) {
    Subspace s(ambient_n);
    for (const auto& m : mats) s.try_add(m, tol * m.norm());
    return s;
  }

  /// As span(), taking the ambient dimension from the first member.
  static Subspace of(std::span<const ComplexMatrix> mats, double tol = kDefaultRankTol) {
    if (mats.empty()) throw Error(ErrorKind::InvalidInput, "Subspace::of: empty family needs an explicit dimension");
    return span(mats, mats.front().rows(), tol);
  }

  Eigen::Index ambient_n() const noexcept { return ambient_n_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<ComplexMatrix>& basis() const& noexcept { return basis_; }
  std::vector<ComplexMatrix> basis() && { return std::move(basis_); }
  const ComplexMatrix& operator[](std::size_t i) const { return basis_[i]; }

  /// Appends the component of x orthogonal to the current span if its norm
  /// exceeds `threshold`. Two passes of modified Gram-Schmidt.
  bool try_add(const ComplexMatrix& x, double threshold) {
    check_member(x, "Subspace::try_add");
    require_finite(x, "Subspace::try_add argument");
    RealVector v = vectorize(x);
    if (v.norm() == 0.0) return false;
    for (int pass = 0; pass < 2; ++pass)
      for (Eigen::Index j = 0; j < coords_.cols(); ++j) v -= coords_.col(j).dot(v) * coords_.col(j);
    const double r = v.norm();
    if (!(r > threshold) || r == 0.0) return false;
    v /= r;
    coords_.conservativeResize(Eigen::NoChange, coords_.cols() + 1);
    coords_.col(coords_.cols() - 1) = v;
    basis_.push_back(devectorize(v, ambient_n_));
    return true;
  }

  /// Coefficients of the orthogonal projection of x in this basis.
  RealVector coordinates(const ComplexMatrix& x) const {
    check_member(x, "Subspace::coordinates");
    return coords_.transpose() * vectorize(x);
  }

  ComplexMatrix combine(const RealVector& c) const {
    if (c.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "Subspace::combine: coefficient count");
    if (dim() == 0) return ComplexMatrix::Zero(ambient_n_, ambient_n_);
    return devectorize(coords_ * c, ambient_n_);
  }

  ComplexMatrix project(const ComplexMatrix& x) const { return combine(coordinates(x)); }

  /// ||x - project(x)||_F
  double defect(const ComplexMatrix& x) const { return (x - project(x)).norm(); }

  bool contains(const ComplexMatrix& x, double tol) const { return defect(x) <= tol * std::max(1.0, x.norm()); }

  /// max |G - I| over the Gram matrix of the stored basis.
  double gram_defect() const {
    if (dim() == 0) return 0.0;
    return (coords_.transpose() * coords_ - RealMatrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
  }

 private:
  void check_member(const ComplexMatrix& x, const char* what) const {
    require_square(x, what);
    if (x.rows() != ambient_n_) {
      throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": matrix is " + std::to_string(x.rows()) +
                                                    "x" + std::to_string(x.rows()) + ", subspace ambient n=" +
                                                    std::to_string(ambient_n_));
    }
  }

  Eigen::Index ambient_n_;
  std::vector<ComplexMatrix> basis_;
  RealMatrix coords_;  // vectorized basis, one column per element
};

inline constexpr int kClosureIterationCap = 64;

/// Smallest bracket-closed subspace containing the generators. Each round
/// brackets the elements added in the previous round against the whole
/// current basis; stops when nothing new appears or max_dim is reached.
inline Subspace lie_closure(std::span<const ComplexMatrix> generators, int max_dim,
                            double tol = kDefaultRankTol, int iteration_cap = kClosureIterationCap) {
  if (generators.empty()) throw Error(ErrorKind::InvalidInput, "lie_closure: empty generator list");
  if (max_dim < 1) throw Error(ErrorKind::InvalidInput, "lie_closure: max_dim must be >= 1");
  const Eigen::Index n = generators.front().rows();
  for (const auto& g : generators) {
    require_square(g, "lie_closure generator");
    require_finite(g, "lie_closure generator");
    if (g.rows() != n) throw Error(ErrorKind::DimensionMismatch, "lie_closure: generators of mixed dimension");
  }

  Subspace algebra = Subspace::span(generators, n, tol);
  std::vector<int> frontier(algebra.dim());
  for (int i = 0; i < algebra.dim(); ++i) frontier[i] = i;

  int round = 0;
  while (!frontier.empty() && algebra.dim() < max_dim) {
    if (++round > iteration_cap) {
      throw Error(ErrorKind::Diagnostics, "lie_closure did not stabilize within " + std::to_string(iteration_cap) +
                                              " rounds (dim " + std::to_string(algebra.dim()) + ")");
    }
    std::vector<int> added;
    const int full = algebra.dim();
    for (int i : frontier) {
      for (int j = 0; j < full && algebra.dim() < max_dim; ++j) {
        if (i == j) continue;
        const ComplexMatrix b = commutator(algebra[i], algebra[j]);
        if (algebra.try_add(b, tol * std::max(1.0, b.norm()))) added.push_back(algebra.dim() - 1);
      }
    }
    frontier = std::move(added);
  }
  return algebra;
}

inline bool is_controllable_rank(std::span<const ComplexMatrix> generators, int ambient_dim,
                                 double tol = kDefaultRankTol) {
  return lie_closure(generators, ambient_dim, tol).dim() == ambient_dim;
}

/// Largest projection defect of [b_i, b_j] over all basis pairs.
inline double closure_defect(const Subspace& s) {
  double worst = 0.0;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) worst = std::max(worst, s.defect(commutator(s[i], s[j])));
  return worst;
}

inline bool is_bracket_closed(const Subspace& s, double tol = 1e-8) { return closure_defect(s) <= tol; }

namespace detail {

inline RealMatrix ad_matrix_unchecked(const ComplexMatrix& x, const Subspace& basis) {
  const int d = basis.dim();
  RealMatrix ad(d, d);
  for (int j = 0; j < d; ++j) ad.col(j) = basis.coordinates(commutator(x, basis[j]));
  return ad;
}

inline void require_ad_preconditions(const Subspace& basis, std::initializer_list<const ComplexMatrix*> xs) {
  for (const ComplexMatrix* x : xs) {
    if (!basis.contains(*x, 1e-8))
      throw Error(ErrorKind::Precondition, "element lies outside the span of the given basis");
  }
  if (!is_bracket_closed(basis, 1e-8))
    throw Error(ErrorKind::Precondition, "basis is not bracket-closed");
}

}  // namespace detail

/// Matrix of Y -> [X, Y] in the orthonormal basis.
inline RealMatrix ad_matrix(const ComplexMatrix& x, const Subspace& basis) {
  detail::require_ad_preconditions(basis, {&x});
  return detail::ad_matrix_unchecked(x, basis);
}

/// B(X, Y) = Tr(ad X ad Y) relative to the enclosing bracket-closed basis.
inline double killing_form(const ComplexMatrix& x, const ComplexMatrix& y, const Subspace& basis) {
  detail::require_ad_preconditions(basis, {&x, &y});
  return (detail::ad_matrix_unchecked(x, basis) * detail::ad_matrix_unchecked(y, basis)).trace();
}

/// Ad_g(X) = g X g^{-1}.
inline ComplexMatrix adjoint_action(const ComplexMatrix& g, const ComplexMatrix& x) {
  require_same_dim(g, x, "adjoint_action");
  Eigen::FullPivLU<ComplexMatrix> lu(g);
  if (!lu.isInvertible()) throw Error(ErrorKind::Precondition, "adjoint_action: g is singular");
  return g * x * lu.inverse();
}

}  // namespace liectl
