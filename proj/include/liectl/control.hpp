#pragma once

// Bilinear right-invariant control systems on SU(n)
//
//   U' = (Omega_d + sum_j u_j(t) Omega_j) U,   U(0) = I,
//
// with anti-Hermitian traceless generators (Omega = -iH), plus the linear
// system x' = A x + B u and the planar drift example x1' = x2^2, x2' = u.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "cartan.hpp"
#include "geodesics.hpp"
#include "lie_algebra.hpp"
#include "random.hpp"

namespace liectl {

inline constexpr double kGeneratorTol = 1e-10;

struct ControlSystem {
  Eigen::Index n = 0;
  ComplexMatrix drift;                  // zero matrix when there is no drift
  std::vector<ComplexMatrix> controls;  // non-empty
  std::optional<double> bound;          // per-channel |u_j| cap; nullopt = unbounded

  bool has_drift() const { return drift.size() > 0 && drift.norm() > 0.0; }
  int channels() const { return static_cast<int>(controls.size()); }
};

inline void validate(const ControlSystem& sys) {
  if (sys.n < 1) throw Error(ErrorKind::InvalidInput, "ControlSystem: n must be >= 1");
  if (sys.controls.empty()) throw Error(ErrorKind::InvalidInput, "ControlSystem: controls must be non-empty");
  if (sys.bound && !(*sys.bound > 0.0)) throw Error(ErrorKind::InvalidInput, "ControlSystem: bound must be positive");
  auto check = [&](const ComplexMatrix& g, const std::string& name) {
    require_square(g, name.c_str());
    require_finite(g, name.c_str());
    if (g.rows() != sys.n) throw Error(ErrorKind::DimensionMismatch, name + " has the wrong dimension");
    if (!is_anti_hermitian(g, kGeneratorTol)) throw Error(ErrorKind::Precondition, name + " is not anti-Hermitian");
    if (!is_traceless(g, kGeneratorTol)) throw Error(ErrorKind::Precondition, name + " is not traceless");
  };
  check(sys.drift, "drift");
  for (std::size_t j = 0; j < sys.controls.size(); ++j) check(sys.controls[j], "control " + std::to_string(j));
}

inline ControlSystem make_system(const ComplexMatrix& drift, std::vector<ComplexMatrix> controls,
                                 std::optional<double> bound = std::nullopt) {
  ControlSystem sys;
  sys.n = controls.empty() ? drift.rows() : controls.front().rows();
  sys.drift = drift.size() == 0 ? ComplexMatrix::Zero(sys.n, sys.n) : drift;
  sys.controls = std::move(controls);
  sys.bound = bound;
  validate(sys);
  return sys;
}

/// Piecewise-constant amplitudes: values[i] holds on [breakpoints[i], breakpoints[i+1]).
/// Controls are zero outside [breakpoints.front(), breakpoints.back()].
struct ControlLaw {
  std::vector<double> breakpoints;
  std::vector<RealVector> values;

  double duration() const { return breakpoints.empty() ? 0.0 : breakpoints.back(); }
  std::size_t intervals() const { return values.size(); }
};

inline void validate(const ControlLaw& law, int channels, std::optional<double> bound) {
  if (law.breakpoints.empty() && law.values.empty()) return;
  if (law.breakpoints.size() != law.values.size() + 1)
    throw Error(ErrorKind::InvalidInput, "ControlLaw: need one more breakpoint than value rows");
  if (law.breakpoints.front() != 0.0) throw Error(ErrorKind::InvalidInput, "ControlLaw: first breakpoint must be 0");
  for (std::size_t i = 1; i < law.breakpoints.size(); ++i)
    if (!(law.breakpoints[i] > law.breakpoints[i - 1]))
      throw Error(ErrorKind::InvalidInput, "ControlLaw: breakpoints must increase");
  for (const auto& v : law.values) {
    if (v.size() != channels) throw Error(ErrorKind::DimensionMismatch, "ControlLaw: amplitude vector length");
    for (double x : v) {
      if (!std::isfinite(x)) throw Error(ErrorKind::InvalidInput, "ControlLaw: non-finite amplitude");
      if (bound && std::abs(x) > *bound * (1.0 + 1e-12))
        throw Error(ErrorKind::Precondition, "ControlLaw: amplitude " + std::to_string(x) + " exceeds bound " +
                                                 std::to_string(*bound));
    }
  }
}

/// Equal-length intervals over [0, horizon].
inline ControlLaw uniform_law(const std::vector<RealVector>& values, double horizon) {
  ControlLaw law;
  if (values.empty()) return law;
  const auto k = values.size();
  for (std::size_t i = 0; i <= k; ++i) law.breakpoints.push_back(horizon * static_cast<double>(i) / k);
  law.breakpoints.back() = horizon;
  law.values = values;
  return law;
}

inline ComplexMatrix generator(const ControlSystem& sys, const RealVector& u) {
  ComplexMatrix g = sys.drift;
  for (int j = 0; j < sys.channels(); ++j) g += u[j] * sys.controls[j];
  return g;
}

/// U(T) for the law's full duration, one exponential per interval.
inline ComplexMatrix final_propagator(const ControlSystem& sys, const ControlLaw& law) {
  ComplexMatrix u = identity(sys.n);
  for (std::size_t i = 0; i < law.intervals(); ++i)
    u = expm(generator(sys, law.values[i]) * (law.breakpoints[i + 1] - law.breakpoints[i])) * u;
  return u;
}

/// Propagator sampled on a grid no coarser than dt. Each interval is
/// propagated exactly; dt only controls output density.
inline Trajectory simulate(const ControlSystem& sys, const ControlLaw& law, double dt) {
  validate(sys);
  validate(law, sys.channels(), sys.bound);
  if (!(dt > 0.0)) throw Error(ErrorKind::InvalidInput, "simulate: dt must be positive");
  Trajectory traj;
  ComplexMatrix u = identity(sys.n);
  traj.times.push_back(0.0);
  traj.points.push_back(u);
  for (std::size_t i = 0; i < law.intervals(); ++i) {
    const double a = law.breakpoints[i];
    const double b = law.breakpoints[i + 1];
    const int sub = std::max(1, static_cast<int>(std::ceil((b - a) / dt - 1e-9)));
    const double h = (b - a) / sub;
    const ComplexMatrix step = expm(generator(sys, law.values[i]) * h);
    for (int s = 1; s <= sub; ++s) {
      u = step * u;
      traj.times.push_back(s == sub ? b : a + s * h);
      traj.points.push_back(u);
    }
  }
  return traj;
}

struct ControllabilityReport {
  int control_dim = 0;
  int full_dim = 0;
  int ambient_dim = 0;
  bool driftless_controllable = false;
  bool controllable_with_drift = false;
  bool drift_needed = false;
  bool has_drift = false;
  /// Orthonormal basis of span{Omega_j}: the distribution D at U = I.
  std::vector<ComplexMatrix> distribution;
  /// Anchor of the affine distribution Omega_d U + D at U = I.
  ComplexMatrix drift_anchor;
};

inline ControllabilityReport controllability_report(const ControlSystem& sys) {
  validate(sys);
  ControllabilityReport r;
  r.ambient_dim = static_cast<int>(sys.n * sys.n - 1);
  r.has_drift = sys.has_drift();
  const int cap = std::max(1, r.ambient_dim);
  r.control_dim = lie_closure(sys.controls, cap).dim();
  std::vector<ComplexMatrix> all = sys.controls;
  if (r.has_drift) all.push_back(sys.drift);
  r.full_dim = lie_closure(all, cap).dim();
  r.driftless_controllable = r.control_dim == r.ambient_dim;
  r.controllable_with_drift = r.full_dim == r.ambient_dim;
  r.drift_needed = r.controllable_with_drift && !r.driftless_controllable;
  r.distribution = Subspace::span(sys.controls, sys.n).basis();
  r.drift_anchor = sys.drift;
  return r;
}

struct GroupCommutator {
  ComplexMatrix u;
  double residual = 0.0;  // ||u - (I + dt^2 [o1, o2])||_F
};

/// exp(o1 dt) exp(o2 dt) exp(-o1 dt) exp(-o2 dt) = I + dt^2 [o1, o2] + O(dt^3).
inline GroupCommutator ng_generator(const ComplexMatrix& o1, const ComplexMatrix& o2, double dt) {
  require_same_dim(o1, o2, "ng_generator");
  GroupCommutator out;
  out.u = expm(o1 * dt) * expm(o2 * dt) * expm(-o1 * dt) * expm(-o2 * dt);
  out.residual = (out.u - (identity(o1.rows()) + dt * dt * commutator(o1, o2))).norm();
  return out;
}

struct LinearSystem {
  ComplexMatrix a;  // n x n
  ComplexMatrix b;  // n x m, columns b_j
};

inline void validate(const LinearSystem& sys) {
  require_square(sys.a, "LinearSystem.A");
  if (sys.b.rows() != sys.a.rows() || sys.b.cols() < 1)
    throw Error(ErrorKind::DimensionMismatch, "LinearSystem: B must have as many rows as A and at least one column");
}

/// rank [B, AB, ..., A^{n-1} B].
inline int kalman_rank(const LinearSystem& sys, double tol = kDefaultRankTol) {
  validate(sys);
  const Eigen::Index n = sys.a.rows();
  const Eigen::Index m = sys.b.cols();
  ComplexMatrix ctrb(n, n * m);
  ComplexMatrix block = sys.b;
  for (Eigen::Index k = 0; k < n; ++k) {
    ctrb.middleCols(k * m, m) = block;
    block = sys.a * block;
  }
  return numerical_rank(ctrb, tol);
}

inline bool completely_controllable(const LinearSystem& sys) { return kalman_rank(sys) == sys.a.rows(); }

/// x(T) = e^{AT} x0 + int_0^T e^{A(T-s)} B u(s) ds, integrated exactly per
/// constant interval through the augmented exponential [[A, Bu], [0, 0]].
inline Eigen::VectorXcd linear_solution(const LinearSystem& sys, const ControlLaw& law, double horizon,
                                        const Eigen::VectorXcd& x0) {
  validate(sys);
  validate(law, static_cast<int>(sys.b.cols()), std::nullopt);
  if (!(horizon >= 0.0)) throw Error(ErrorKind::InvalidInput, "linear_solution: horizon must be >= 0");
  const Eigen::Index n = sys.a.rows();
  if (x0.size() != n) throw Error(ErrorKind::DimensionMismatch, "linear_solution: x0 length");

  auto advance = [&](Eigen::VectorXcd x, const Eigen::VectorXcd& bu, double h) {
    if (h <= 0.0) return x;
    ComplexMatrix aug = ComplexMatrix::Zero(n + 1, n + 1);
    aug.topLeftCorner(n, n) = sys.a;
    aug.topRightCorner(n, 1) = bu;
    const ComplexMatrix e = expm(aug * h);
    return Eigen::VectorXcd(e.topLeftCorner(n, n) * x + e.topRightCorner(n, 1));
  };

  Eigen::VectorXcd x = x0;
  const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(n);
  double t = 0.0;
  for (std::size_t i = 0; i < law.intervals() && t < horizon; ++i) {
    const double end = std::min(law.breakpoints[i + 1], horizon);
    const Eigen::VectorXcd bu = sys.b * law.values[i].cast<Complex>();
    x = advance(x, bu, end - t);
    t = end;
  }
  return advance(x, zero, horizon - t);
}

/// Endpoints of `count` random bounded piecewise-constant laws, each with
/// `segments` equal intervals over a random horizon in (0, T]. Amplitudes are
/// uniform in [-bound, bound] (unit cap for unbounded systems).
inline std::vector<ComplexMatrix> reachable_samples(const ControlSystem& sys, double horizon, int count, int segments,
                                                    std::uint64_t seed) {
  validate(sys);
  if (!(horizon > 0.0) || count < 1 || segments < 1)
    throw Error(ErrorKind::InvalidInput, "reachable_samples: need horizon > 0, count >= 1, segments >= 1");
  const double cap = sys.bound.value_or(1.0);
  Rng rng = make_rng({seed});
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> amp(-cap, cap);
  std::vector<ComplexMatrix> out;
  out.reserve(count);
  for (int s = 0; s < count; ++s) {
    const double tau = horizon * (1.0 - unit(rng));  // (0, T]
    std::vector<RealVector> values(segments, RealVector(sys.channels()));
    for (auto& v : values)
      for (auto& x : v) x = amp(rng);
    out.push_back(final_propagator(sys, uniform_law(values, tau)));
  }
  return out;
}

struct MinTimeOptions {
  int segments = 6;             // piecewise-constant pieces per candidate law
  int candidates = 48;          // random shots per horizon
  double initial_horizon = 1.0;
  double max_horizon = 64.0;
  double relative_gap = 1e-3;  // stop bisecting when (hi - lo) <= gap * hi
  int workers = 1;
};

struct MinTimeResult {
  bool reached = false;
  double t_est = std::numeric_limits<double>::infinity();
  double achieved_error = std::numeric_limits<double>::infinity();
  int simulations = 0;
};

namespace detail {

struct ShootResult {
  double error = std::numeric_limits<double>::infinity();
  std::vector<RealVector> values;
};

// Random shooting followed by coordinate descent, at a fixed horizon.
inline ShootResult shoot(const ControlSystem& sys, const ComplexMatrix& target, double horizon, double eps,
                         std::uint64_t seed, std::uint64_t stream, const MinTimeOptions& opt, int& budget) {
  const double b = *sys.bound;
  const int m = sys.channels();
  auto error_of = [&](const std::vector<RealVector>& v) {
    return (final_propagator(sys, uniform_law(v, horizon)) - target).norm();
  };

  const int workers = std::max(1, opt.workers);
  const int shots = std::min(opt.candidates, std::max(0, budget));
  budget -= shots;
  std::vector<ShootResult> per_worker(workers);
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        Rng rng = make_rng({seed, stream, static_cast<std::uint64_t>(w)});
        std::uniform_real_distribution<double> amp(-b, b);
        for (int i = w; i < shots; i += workers) {
          std::vector<RealVector> v(opt.segments, RealVector(m));
          for (auto& seg : v)
            for (auto& x : seg) x = amp(rng);
          const double e = error_of(v);
          if (e < per_worker[w].error) per_worker[w] = {e, std::move(v)};
        }
      });
    }
  }
  ShootResult best;
  for (auto& r : per_worker)
    if (r.error < best.error) best = std::move(r);
  if (best.values.empty()) return best;

  double step = 0.5 * b;
  while (best.error > eps && step > 1e-7 * b && budget > 0) {
    bool improved = false;
    for (int s = 0; s < opt.segments && budget > 0; ++s) {
      for (int j = 0; j < m && budget > 0; ++j) {
        for (double sign : {1.0, -1.0}) {
          if (budget <= 0) break;
          const double old = best.values[s][j];
          const double cand = std::clamp(old + sign * step, -b, b);
          if (cand == old) continue;
          best.values[s][j] = cand;
          --budget;
          const double e = error_of(best.values);
          if (e < best.error) {
            best.error = e;
            improved = true;
            break;
          }
          best.values[s][j] = old;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return best;
}

}  // namespace detail

/// Heuristic upper bound on the infimizing time to reach `target`: bracket a
/// feasible horizon, then bisect, deciding feasibility at each horizon by
/// random shooting plus coordinate descent. `budget` caps propagator
/// evaluations. Needs a finite control bound.
inline MinTimeResult min_time_estimate(const ControlSystem& sys, const ComplexMatrix& target, double eps, int budget,
                                       std::uint64_t seed, const MinTimeOptions& opt = {}) {
  validate(sys);
  require_square(target, "min_time_estimate target");
  if (target.rows() != sys.n) throw Error(ErrorKind::DimensionMismatch, "min_time_estimate: target dimension");
  if (!is_unitary(target, 1e-8) || std::abs(target.determinant() - 1.0) > 1e-8)
    throw Error(ErrorKind::Precondition, "min_time_estimate: target is not in SU(n)");
  if (!(eps > 0.0)) throw Error(ErrorKind::InvalidInput, "min_time_estimate: eps must be positive");
  if (!sys.bound) throw Error(ErrorKind::Precondition, "min_time_estimate: requires a finite control bound");

  MinTimeResult out;
  const double at_identity = (target - identity(sys.n)).norm();
  if (at_identity <= eps) {
    out.reached = true;
    out.t_est = 0.0;
    out.achieved_error = at_identity;
    return out;
  }

  int remaining = budget;
  std::uint64_t stream = 0;
  double best_error = std::numeric_limits<double>::infinity();
  auto feasible = [&](double horizon) {
    const auto r = detail::shoot(sys, target, horizon, eps, seed, stream++, opt, remaining);
    best_error = std::min(best_error, r.error);
    return std::pair{r.error <= eps, r.error};
  };

  double lo = 0.0, hi = -1.0, hi_error = 0.0;
  double t = opt.initial_horizon;
  auto [ok, err] = feasible(t);
  if (ok) {
    hi = t;
    hi_error = err;
    // Walk down until infeasible to get a lower bracket.
    while (remaining > 0 && t > 1e-6) {
      t *= 0.5;
      auto [ok2, err2] = feasible(t);
      if (!ok2) {
        lo = t;
        break;
      }
      hi = t;
      hi_error = err2;
    }
  } else {
    lo = t;
    while (remaining > 0 && t < opt.max_horizon) {
      t = std::min(2.0 * t, opt.max_horizon);
      auto [ok2, err2] = feasible(t);
      if (ok2) {
        hi = t;
        hi_error = err2;
        break;
      }
      lo = t;
    }
  }

  if (hi < 0.0) {
    out.achieved_error = best_error;
    out.simulations = budget - remaining;
    return out;
  }

  while (remaining > 0 && hi - lo > opt.relative_gap * hi) {
    const double mid = 0.5 * (lo + hi);
    auto [ok3, err3] = feasible(mid);
    if (ok3) {
      hi = mid;
      hi_error = err3;
    } else {
      lo = mid;
    }
  }
  out.reached = true;
  out.t_est = hi;
  out.achieved_error = hi_error;
  out.simulations = budget - remaining;
  return out;
}

/// States (p1, p2) of p1' = p2^2, p2' = u along a fixed-step RK4 grid
/// (dt <= 1e-3, refined so every law breakpoint is a grid point).
inline std::vector<std::array<double, 2>> r2_path(const ControlLaw& law, double horizon, std::array<double, 2> start,
                                                  double dt = 1e-3) {
  validate(law, 1, std::nullopt);
  if (!(horizon >= 0.0)) throw Error(ErrorKind::InvalidInput, "r2_example: horizon must be >= 0");
  std::vector<double> cuts{0.0};
  for (double b : law.breakpoints)
    if (b > 0.0 && b < horizon) cuts.push_back(b);
  cuts.push_back(horizon);

  auto control_at = [&](double t) {
    for (std::size_t i = 0; i < law.intervals(); ++i)
      if (t >= law.breakpoints[i] && t < law.breakpoints[i + 1]) return law.values[i][0];
    return 0.0;
  };

  std::vector<std::array<double, 2>> path{start};
  std::array<double, 2> x = start;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const double len = cuts[c + 1] - cuts[c];
    if (len <= 0.0) continue;
    const double u = control_at(0.5 * (cuts[c] + cuts[c + 1]));
    const int steps = std::max(1, static_cast<int>(std::ceil(len / dt - 1e-9)));
    const double h = len / steps;
    auto f = [u](const std::array<double, 2>& s) { return std::array<double, 2>{s[1] * s[1], u}; };
    for (int i = 0; i < steps; ++i) {
      const auto k1 = f(x);
      const auto k2 = f({x[0] + 0.5 * h * k1[0], x[1] + 0.5 * h * k1[1]});
      const auto k3 = f({x[0] + 0.5 * h * k2[0], x[1] + 0.5 * h * k2[1]});
      const auto k4 = f({x[0] + h * k3[0], x[1] + h * k3[1]});
      x[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
      x[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
      path.push_back(x);
    }
  }
  return path;
}

inline std::array<double, 2> r2_example(const ControlLaw& law, double horizon, std::array<double, 2> start) {
  return r2_path(law, horizon, start).back();
}

/// Samples Ad_k(drift) for random k in K = exp(k). The drift must lie in p
/// and the controls must generate exactly k.
inline std::vector<ComplexMatrix> adjoint_system_directions(const ControlSystem& sys, const CartanPair& pair,
                                                            int samples, std::uint64_t seed) {
  validate(sys);
  if (sys.n != pair.ambient_n()) throw Error(ErrorKind::DimensionMismatch, "adjoint_system_directions: dimensions");
  if (samples < 1) throw Error(ErrorKind::InvalidInput, "adjoint_system_directions: samples must be >= 1");
  if (!pair.p.contains(sys.drift, 1e-8)) throw Error(ErrorKind::Precondition, "adjoint_system_directions: drift is not in p");
  const Subspace generated = lie_closure(sys.controls, pair.k.dim() + pair.p.dim());
  bool inside = generated.dim() == pair.k.dim();
  for (const auto& b : generated.basis()) inside = inside && pair.k.contains(b, 1e-8);
  if (!inside) throw Error(ErrorKind::Precondition, "adjoint_system_directions: controls do not generate k");

  Rng rng = make_rng({seed});
  std::vector<ComplexMatrix> out;
  out.reserve(samples);
  for (int s = 0; s < samples; ++s) out.push_back(adjoint_action(sample_k(pair, rng), sys.drift));
  return out;
}

}  // namespace liectl
