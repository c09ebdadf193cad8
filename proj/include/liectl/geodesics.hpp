#pragma once

// Normal geodesics of k + p sub-Riemannian structures, where the
// distribution at x is the left translate x p:
//
//   x(t) = x0 exp((A_k + A_p) t) exp(-A_k t),   A_k in k, A_p in p, ||A_p||_p = 1.
//
// Its body velocity x^{-1} x' = Ad_{exp(A_k t)} A_p stays in p, so these
// curves are horizontal and parametrized by arclength.

#include <cmath>
#include <complex>
#include <vector>

#include "cartan.hpp"

namespace liectl {

inline constexpr double kSpecTol = 1e-10;

/// sqrt(scale * <x, x>) with the pair's p-metric scale; x must lie in p.
inline double p_norm(const ComplexMatrix& x, const CartanPair& pair) {
  if (x.rows() != pair.ambient_n() || !pair.p.contains(x, 1e-8))
    throw Error(ErrorKind::Precondition, "p_norm: argument is not in p");
  return std::sqrt(pair.p_metric_scale * frobenius_inner(x, x));
}

struct GeodesicSpec {
  ComplexMatrix x0;
  ComplexMatrix a_k;
  ComplexMatrix a_p;
  CartanPair pair;
};

inline void validate(const GeodesicSpec& spec) {
  const Eigen::Index n = spec.pair.ambient_n();
  for (const ComplexMatrix* m : {&spec.x0, &spec.a_k, &spec.a_p}) {
    require_square(*m, "GeodesicSpec");
    require_finite(*m, "GeodesicSpec");
    if (m->rows() != n) throw Error(ErrorKind::DimensionMismatch, "GeodesicSpec: matrix size differs from the pair");
  }
  if (!spec.pair.k.contains(spec.a_k, kSpecTol)) throw Error(ErrorKind::Precondition, "GeodesicSpec: a_k is not in k");
  if (!spec.pair.p.contains(spec.a_p, kSpecTol)) throw Error(ErrorKind::Precondition, "GeodesicSpec: a_p is not in p");
  const double len = std::sqrt(spec.pair.p_metric_scale * frobenius_inner(spec.a_p, spec.a_p));
  if (std::abs(len - 1.0) > kSpecTol)
    throw Error(ErrorKind::Precondition, "GeodesicSpec: a_p is not arclength-normalized (||a_p||_p = " +
                                             std::to_string(len) + ")");
}

inline ComplexMatrix geodesic_point(const GeodesicSpec& spec, double t) {
  validate(spec);
  return spec.x0 * expm((spec.a_k + spec.a_p) * t) * expm(-spec.a_k * t);
}

struct Trajectory {
  std::vector<double> times;
  std::vector<ComplexMatrix> points;

  std::size_t size() const { return times.size(); }
};

inline void validate(const Trajectory& traj) {
  if (traj.times.empty() || traj.times.size() != traj.points.size())
    throw Error(ErrorKind::InvalidInput, "Trajectory: times and points must be non-empty and of equal length");
  if (traj.times.front() != 0.0) throw Error(ErrorKind::InvalidInput, "Trajectory: time grid must start at 0");
  for (std::size_t i = 1; i < traj.times.size(); ++i)
    if (!(traj.times[i] > traj.times[i - 1])) throw Error(ErrorKind::InvalidInput, "Trajectory: times must increase");
}

/// Uniform grid of `steps` intervals on [0, horizon].
inline Trajectory sample_geodesic(const GeodesicSpec& spec, double horizon, int steps) {
  if (steps < 1 || !(horizon > 0.0)) throw Error(ErrorKind::InvalidInput, "sample_geodesic: need steps >= 1, horizon > 0");
  validate(spec);
  Trajectory traj;
  for (int i = 0; i <= steps; ++i) {
    const double t = horizon * static_cast<double>(i) / steps;
    traj.times.push_back(t);
    traj.points.push_back(spec.x0 * expm((spec.a_k + spec.a_p) * t) * expm(-spec.a_k * t));
  }
  return traj;
}

/// log(x_i^{-1} x_{i+1}) for every grid step.
inline std::vector<ComplexMatrix> step_logs(const Trajectory& traj) {
  validate(traj);
  if (traj.size() < 2) throw Error(ErrorKind::InvalidInput, "Trajectory needs at least two points");
  std::vector<ComplexMatrix> logs;
  logs.reserve(traj.size() - 1);
  for (std::size_t i = 0; i + 1 < traj.size(); ++i) {
    const ComplexMatrix step = traj.points[i].partialPivLu().solve(traj.points[i + 1]);
    logs.push_back(logm_near_identity(step));
  }
  return logs;
}

/// Sum over grid steps of the p-norm of the p-component of log(x_i^{-1} x_{i+1}),
/// i.e. the length of the piecewise one-parameter-subgroup interpolant.
inline double horizontal_length(const Trajectory& traj, const CartanPair& pair) {
  double total = 0.0;
  for (const auto& lg : step_logs(traj)) {
    const ComplexMatrix horiz = pair.p.project(lg);
    total += std::sqrt(pair.p_metric_scale * frobenius_inner(horiz, horiz));
  }
  return total;
}

/// Every finite-difference body velocity has a k-component (measured with
/// the p-metric scale) of at most tol * max(1, |velocity|).
inline bool is_horizontal(const Trajectory& traj, const CartanPair& pair, double tol) {
  const auto logs = step_logs(traj);
  for (std::size_t i = 0; i < logs.size(); ++i) {
    const ComplexMatrix v = logs[i] / (traj.times[i + 1] - traj.times[i]);
    const ComplexMatrix vertical = pair.k.project(v);
    const double vert = std::sqrt(pair.p_metric_scale * frobenius_inner(vertical, vertical));
    const double speed = std::sqrt(pair.p_metric_scale * frobenius_inner(v, v));
    if (vert > tol * std::max(1.0, speed)) return false;
  }
  return true;
}

struct MuNu {
  Complex mu;
  Complex nu;
};

enum class ClosedFormVariant { Literal, Oracle };

/// (mu, nu) of the su(2) geodesic with initial covector
/// cos(theta) sigma_x + sin(theta) sigma_y + c sigma_z, through the
/// identification [[mu, nu], [-conj(nu), conj(mu)]] -> (mu, nu).
///
/// Literal evaluates the published trigonometric expressions term by term,
/// including the sin(sqrt(1+c^2) c t / 2) argument in the first real term.
/// Oracle multiplies the two exponentials.
inline MuNu su2_geodesic_closed_form(double theta, double c, double t,
                                      ClosedFormVariant variant = ClosedFormVariant::Oracle) {
  if (variant == ClosedFormVariant::Oracle) {
    const ComplexMatrix lambda =
        std::cos(theta) * pauli::sigma_x() + std::sin(theta) * pauli::sigma_y() + c * pauli::sigma_z();
    const ComplexMatrix u = expm(lambda * t) * expm(-c * t * pauli::sigma_z());
    return {u(0, 0), u(0, 1)};
  }
  const double w = std::sqrt(1.0 + c * c);
  const double half_ct = c * t / 2.0;
  const double re_mu =
      c * std::sin(half_ct) * std::sin(w * c * t / 2.0) / w + std::cos(half_ct) * std::cos(w * t / 2.0);
  const double im_mu = c * std::cos(half_ct) * std::sin(w * t / 2.0) / w - std::sin(half_ct) * std::cos(w * t / 2.0);
  const double amp = std::sin(w * t / 2.0) / w;
  return {Complex(re_mu, im_mu), Complex(amp * std::cos(half_ct + theta), amp * std::sin(half_ct + theta))};
}

/// Geodesic with covector cos(theta) P1 + sin(theta) P2 - c K on so(2,1),
/// where P1, P2 are the unit boosts and K = [P1, P2], evaluated from the
/// two-exponential formula. Returns a 3x3 element of SO_0(2,1).
inline ComplexMatrix so21_geodesic(double theta, double c, double t) {
  const CartanPair pair = build_so_n1(2);
  ComplexMatrix p1 = ComplexMatrix::Zero(3, 3), p2 = ComplexMatrix::Zero(3, 3);
  p1(0, 2) = p1(2, 0) = 1.0;
  p2(1, 2) = p2(2, 1) = 1.0;
  const ComplexMatrix k = commutator(p1, p2);
  GeodesicSpec spec{identity(3), -c * k, std::cos(theta) * p1 + std::sin(theta) * p2, pair};
  return geodesic_point(spec, t);
}

}  // namespace liectl
