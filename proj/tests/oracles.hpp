#pragma once

// Reference computations that share no algorithm with the library: a scaled
// Taylor exponential, RK4 integrators for the geodesic and linear ODEs, and
// the all-subsets form of permutohedron membership for small n.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;

/// exp(X) by Taylor series on X / 2^s with ||X / 2^s|| <= 1/8, then squaring.
inline CMat taylor_expm(const CMat& x) {
  const double norm = x.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  while (std::ldexp(norm, -s) > 0.125) ++s;
  const CMat y = x * std::ldexp(1.0, -s);
  CMat term = CMat::Identity(x.rows(), x.cols());
  CMat sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = (term * y) / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

/// Classical RK4 for x' = x * Ad_{exp(a_k t)}(a_p), x(0) = x0. The rotation
/// exp(a_k t) is advanced by half-step factors rather than re-exponentiated.
inline CMat geodesic_rk4(const CMat& x0, const CMat& a_k, const CMat& a_p, double horizon, double dt) {
  const int steps = std::max(1, static_cast<int>(std::llround(horizon / dt)));
  const double h = horizon / steps;
  const CMat half = taylor_expm(a_k * (0.5 * h));
  const CMat half_inv = taylor_expm(-a_k * (0.5 * h));
  CMat r = CMat::Identity(a_k.rows(), a_k.cols());
  CMat r_inv = r;
  CMat x = x0;
  for (int i = 0; i < steps; ++i) {
    const CMat v0 = r * a_p * r_inv;
    const CMat r_mid = r * half, r_mid_inv = half_inv * r_inv;
    const CMat vm = r_mid * a_p * r_mid_inv;
    r = r_mid * half;
    r_inv = half_inv * r_mid_inv;
    const CMat v1 = r * a_p * r_inv;
    const CMat k1 = x * v0;
    const CMat k2 = (x + 0.5 * h * k1) * vm;
    const CMat k3 = (x + 0.5 * h * k2) * vm;
    const CMat k4 = (x + h * k3) * v1;
    x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return x;
}

/// RK4 for x' = A x + B u(t) with u given pointwise.
inline Eigen::VectorXcd linear_rk4(const CMat& a, const CMat& b, const std::function<Eigen::VectorXd(double)>& u,
                                   const Eigen::VectorXcd& x0, double horizon, double dt) {
  const int steps = std::max(1, static_cast<int>(std::llround(horizon / dt)));
  const double h = horizon / steps;
  Eigen::VectorXcd x = x0;
  auto f = [&](double t, const Eigen::VectorXcd& s) {
    return Eigen::VectorXcd(a * s + b * u(t).cast<Complex>());
  };
  for (int i = 0; i < steps; ++i) {
    const double t = i * h;
    const Eigen::VectorXcd k1 = f(t, x);
    const Eigen::VectorXcd k2 = f(t + 0.5 * h, x + 0.5 * h * k1);
    const Eigen::VectorXcd k3 = f(t + 0.5 * h, x + 0.5 * h * k2);
    const Eigen::VectorXcd k4 = f(t + h, x + h * k3);
    x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return x;
}

/// Convex-hull membership of d in the permutohedron of lambda, decided by
/// the Rado characterization checked against every subset (not just the
/// sorted prefixes the library uses): for every index subset S,
/// sum_{i in S} d_i <= sum of the |S| largest lambda, with equal totals.
inline double permutohedron_excess(const std::vector<double>& d, std::vector<double> lambda) {
  const std::size_t n = d.size();
  std::sort(lambda.rbegin(), lambda.rend());
  std::vector<double> top(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) top[k + 1] = top[k] + lambda[k];
  double excess = 0.0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    double s = 0.0;
    int card = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        s += d[i];
        ++card;
      }
    excess = std::max(excess, s - top[card]);
  }
  double total = 0.0;
  for (double v : d) total += v;
  return std::max(excess, std::abs(total - top[n]));
}

}  // namespace oracle
