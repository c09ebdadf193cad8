#pragma once

// Literal-versus-oracle comparisons for the published formulas that the
// library relies on. Each entry records both values, the deviation and a
// verdict; a "transcription-deviation" verdict means the formula as printed
// disagrees with its oracle while the library follows the oracle.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "control.hpp"
#include "geodesics.hpp"

namespace liectl {

struct AuditEntry {
  std::string section;
  std::string formula;
  double oracle = 0.0;
  double literal = 0.0;
  double deviation = 0.0;
  double tol = 0.0;
  std::string verdict;  // "match" | "transcription-deviation"
  std::string note;
};

struct AuditReport {
  std::vector<AuditEntry> entries;

  void add(std::string section, std::string formula, double oracle, double literal, double deviation, double tol,
           std::string note = {}) {
    entries.push_back({std::move(section), std::move(formula), oracle, literal, deviation, tol,
                       deviation <= tol ? "match" : "transcription-deviation", std::move(note)});
  }

  int deviations() const {
    int c = 0;
    for (const auto& e : entries) c += e.verdict != "match";
    return c;
  }
};

/// Least-squares slope of log(residual) against log(dt).
inline double fitted_order(const std::vector<double>& dts, const std::vector<double>& residuals) {
  const auto m = static_cast<double>(dts.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < dts.size(); ++i) {
    const double x = std::log(dts[i]), y = std::log(residuals[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

namespace detail {

inline void audit_pauli(AuditReport& r) {
  using namespace pauli;
  const ComplexMatrix x = sigma_x(), y = sigma_y(), z = sigma_z();
  r.add("pauli", "[sigma_x, sigma_y] = sigma_z", commutator(x, y).norm(), z.norm(), (commutator(x, y) - z).norm(), 1e-15);
  r.add("pauli", "[sigma_y, sigma_z] = sigma_x", commutator(y, z).norm(), x.norm(), (commutator(y, z) - x).norm(), 1e-15);
  r.add("pauli", "[sigma_z, sigma_x] = sigma_y", commutator(z, x).norm(), y.norm(), (commutator(z, x) - y).norm(), 1e-15);
  double herm = 0.0, skew = 0.0;
  for (const auto& s : {x, y, z}) {
    herm = std::max(herm, (s - s.adjoint()).norm());
    skew = std::max(skew, (s + s.adjoint()).norm());
  }
  r.add("pauli", "sigma_j described as Hermitian", skew, herm, herm, 1e-15,
        "the listed matrices are anti-Hermitian; they are used as such");
}

inline void audit_group_commutator(AuditReport& r) {
  const ComplexMatrix x1 = pauli::sigma_x(), x2 = pauli::sigma_y();
  const ComplexMatrix bracket = commutator(x1, x2);
  const ComplexMatrix i2 = identity(2);
  const std::vector<double> dts{0.2, 0.1, 0.05};

  // Printed product order exp(X2 dt) exp(X1 dt) exp(-X2 dt) exp(-X1 dt).
  std::vector<double> printed, flipped;
  for (double dt : dts) {
    const ComplexMatrix u = expm(x2 * dt) * expm(x1 * dt) * expm(-x2 * dt) * expm(-x1 * dt);
    printed.push_back((u - (i2 - dt * dt * bracket)).norm());
    flipped.push_back((u - (i2 + dt * dt * bracket)).norm());
  }
  const double order = fitted_order(dts, printed);
  r.add("group_commutator", "U(dt) ~ I - dt^2 [X1, X2] (printed order): fitted residual order", 3.0, order,
        std::abs(order - 3.0), 0.3);
  const double order_plus = fitted_order(dts, flipped);
  r.add("group_commutator", "U(dt) ~ I + dt^2 [X1, X2] (printed order): fitted residual order", 3.0, order_plus,
        std::abs(order_plus - 3.0), 0.3, "sign flips with the product order");

  std::vector<double> lib;
  for (double dt : dts) lib.push_back(ng_generator(x1, x2, dt).residual);
  const double order_lib = fitted_order(dts, lib);
  r.add("group_commutator", "ng_generator: exp(o1 dt) exp(o2 dt) exp(-o1 dt) exp(-o2 dt) ~ I + dt^2 [o1, o2]", 3.0,
        order_lib, std::abs(order_lib - 3.0), 0.3);

  const double dt = 0.1;
  const ComplexMatrix u = expm(x2 * dt) * expm(x1 * dt) * expm(-x2 * dt) * expm(-x1 * dt);
  const ComplexMatrix middle = -dt * dt * bracket;
  r.add("group_commutator", "U(dt) = -dt^2 [X1, X2] (middle equality, dt = 0.1)", u.norm(), middle.norm(),
        (u - middle).norm(), 1e-2, "the identity term is missing from the printed middle expression");
}

inline void audit_mu_nu(AuditReport& r) {
  double re_mu = 0.0, im_mu = 0.0, nu = 0.0, norm = 0.0, c0 = 0.0, c0_literal = 0.0;
  double re_mu_oracle_at = 0.0, re_mu_literal_at = 0.0;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 7; ++b)
      for (int k = 0; k < 5; ++k) {
        const double theta = 2.0 * std::numbers::pi * a / 8.0;
        const double c = -1.5 + 0.5 * b;
        const double t = 0.4 + 0.8 * k;
        const MuNu o = su2_geodesic_closed_form(theta, c, t, ClosedFormVariant::Oracle);
        const MuNu l = su2_geodesic_closed_form(theta, c, t, ClosedFormVariant::Literal);
        const double d_re = std::abs(o.mu.real() - l.mu.real());
        if (d_re > re_mu) {
          re_mu = d_re;
          re_mu_oracle_at = o.mu.real();
          re_mu_literal_at = l.mu.real();
        }
        im_mu = std::max(im_mu, std::abs(o.mu.imag() - l.mu.imag()));
        nu = std::max(nu, std::abs(o.nu - l.nu));
        norm = std::max(norm, std::abs(std::norm(o.mu) + std::norm(o.nu) - 1.0));
      }
  for (int a = 0; a < 8; ++a)
    for (int k = 0; k <= 10; ++k) {
      const double theta = 2.0 * std::numbers::pi * a / 8.0;
      const double t = 0.3 * k;
      const Complex mu0(std::cos(t / 2.0), 0.0);
      const Complex nu0 = std::exp(Complex(0.0, theta)) * std::sin(t / 2.0);
      const MuNu o = su2_geodesic_closed_form(theta, 0.0, t, ClosedFormVariant::Oracle);
      const MuNu l = su2_geodesic_closed_form(theta, 0.0, t, ClosedFormVariant::Literal);
      c0 = std::max(c0, std::max(std::abs(o.mu - mu0), std::abs(o.nu - nu0)));
      c0_literal = std::max(c0_literal, std::max(std::abs(l.mu - mu0), std::abs(l.nu - nu0)));
    }
  r.add("su2_mu_nu", "Re mu (first term uses sin(sqrt(1+c^2) c t / 2))", re_mu_oracle_at, re_mu_literal_at, re_mu, 1e-12,
        "oracle uses sin(sqrt(1+c^2) t / 2); the two agree when c = 0 or c = 1");
  r.add("su2_mu_nu", "Im mu", 0.0, im_mu, im_mu, 1e-12);
  r.add("su2_mu_nu", "nu", 0.0, nu, nu, 1e-12);
  r.add("su2_mu_nu", "|mu|^2 + |nu|^2 = 1 (oracle)", 1.0, 1.0 + norm, norm, 1e-12);
  r.add("su2_mu_nu", "c = 0: (cos(t/2), e^{i theta} sin(t/2)) (oracle)", 0.0, c0, c0, 1e-12);
  r.add("su2_mu_nu", "c = 0: (cos(t/2), e^{i theta} sin(t/2)) (literal)", 0.0, c0_literal, c0_literal, 1e-12);
}

inline void audit_so21(AuditReport& r) {
  const CartanPair pair = build_so_n1(2);
  const ComplexMatrix j = lorentz_metric(2);
  double lorentz = 0.0, growth = 0.0;
  for (int k = 0; k <= 12; ++k) {
    const double t = 0.25 * k;
    const ComplexMatrix x = so21_geodesic(0.4, 0.7, t);
    lorentz = std::max(lorentz, (x.transpose() * j * x - j).norm());
    growth = std::max(growth, x.cwiseAbs().maxCoeff());
  }
  r.add("so21", "x0 e^{(Ak+Ap)t} e^{-Ak t} on so(2,1) stays in SO_0(2,1)", 0.0, lorentz, lorentz, 1e-10);

  // Unitary (mu, nu) have modulus <= 1; the so(2,1) geodesic has entries
  // growing like cosh t, so the two curves cannot coincide entrywise.
  r.add("so21", "so(2,1) geodesics coincide with the su(2) (mu, nu)", 1.0, growth, std::max(0.0, growth - 1.0), 1e-12,
        "the curves share the same algebraic form but the so(2,1) one is unbounded");
}

}  // namespace detail

inline AuditReport verify_paper() {
  AuditReport r;
  detail::audit_pauli(r);
  detail::audit_group_commutator(r);
  detail::audit_mu_nu(r);
  detail::audit_so21(r);
  return r;
}

}  // namespace liectl
