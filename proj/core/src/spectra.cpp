// Copyright 2026 The spinab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "spinab/errors.hpp"
#include "spinab/specfun.hpp"

namespace spinab {
namespace {

void require_radius(const Vec3& p, const char* what) {
  if (!(norm(p) >= kRMin)) {
    throw Error(ErrorKind::kSingularity,
                std::string(what) + ": |r| below the 0.05 floor");
  }
}

bool near_integer(double x) { return std::fabs(x - std::round(x)) < 1e-9; }

double s_of_kappa(double k) { return 0.5 * (std::sqrt(1.0 + 4.0 * k) - 1.0); }

double radial_branch(double k, int which, double q, double r) {
  const double s = s_of_kappa(k);
  const double tau = 2.0 * q * r;
  const double pre = std::pow(r, s) * std::exp(-q * r);
  const double alpha = s + 1.0;
  const double gam = 2.0 * s + 2.0;
  if (which == 1) return pre * hyp1f1(alpha, gam, tau);
  return pre * std::pow(tau, 1.0 - gam) * hyp1f1(alpha - gam + 1.0, 2.0 - gam, tau);
}

}  // namespace

const char* to_string(Branch b) { return b == Branch::kA ? "A" : "B"; }

void SpinQN::validate() const {
  if (l < 0) throw Error(ErrorKind::kDomain, "SpinQN: l must be >= 0");
  if (branch == Branch::kB && l == 0) {
    throw Error(ErrorKind::kDomain, "SpinQN: branch B requires l >= 1");
  }
  if (!std::isfinite(g)) throw Error(ErrorKind::kDomain, "SpinQN: g not finite");
}

double SpinQN::K() const {
  validate();
  return branch == Branch::kA ? 0.5 * l : -0.5 * (l + 1);
}

double kappa(const SpinQN& qn) {
  return qn.l * (qn.l + 1.0) + 2.0 * qn.g * qn.K() + 0.5 * qn.g * qn.g;
}

double nu(const SpinQN& qn) {
  const double k = kappa(qn);
  if (k < 0.0) throw Error(ErrorKind::kDomain, "nu: kappa is negative");
  return 0.5 * std::sqrt(1.0 + 4.0 * k);
}

Column angular_spinor(const SpinQN& qn, double theta, double phi) {
  qn.validate();
  const int l = qn.l, m = qn.m;
  const bool ok = qn.branch == Branch::kA ? (m >= -l - 1 && m <= l)
                                          : (m >= -l && m <= l - 1);
  if (!ok) {
    throw Error(ErrorKind::kDomain,
                "angular_spinor: m out of range for l and branch");
  }
  const double ca = std::sqrt(static_cast<double>(l + m + 1));
  const double cb = std::sqrt(static_cast<double>(l - m));
  auto y = [&](int mm) -> cplx {
    if (std::abs(mm) > l) return 0.0;
    return sph_harm(l, mm, theta, phi);
  };
  const double n = 1.0 / std::sqrt(2.0 * l + 1.0);
  if (qn.branch == Branch::kA) {
    return Column(2, {n * ca * y(m), n * cb * y(m + 1)});
  }
  return Column(2, {-n * cb * y(m), n * ca * y(m + 1)});
}

EnergySpec EnergySpec::spherical(double E, const UnitConventions& units) {
  units.validate();
  return {E, 2.0 * units.mass * E / (units.hbar * units.hbar)};
}

EnergySpec EnergySpec::cylindrical(double E, double kz,
                                   const UnitConventions& units) {
  units.validate();
  return {E, 2.0 * units.mass * E / (units.hbar * units.hbar) - kz * kz};
}

Column psi_spin(const SpinQN& qn, const EnergySpec& espec, const Vec3& p) {
  const double k = kappa(qn);
  if (espec.E < 0.0 || espec.epsilon < 0.0) {
    const double q = std::sqrt(std::fabs(espec.epsilon));
    // Keep tau = 2 q r inside the series argument cap.
    const double r_far = std::min(80.0, 20.0 / std::max(q, 1e-300));
    const GrowthReport g = negative_energy_growth(k, q, 0.25 * r_far, r_far);
    throw RejectedBranchError(
        "psi_spin: E < 0 has no normalizable radial solution (growth w1=" +
            std::to_string(g.w1) + ", w2=" + std::to_string(g.w2) + ")",
        g.w1, g.w2);
  }
  if (espec.epsilon == 0.0) {
    throw Error(ErrorKind::kDomain,
                "psi_spin: E = 0 is handled by psi_spin_zero_energy");
  }
  require_radius(p, "psi_spin");
  const SphericalPoint s = to_spherical(p);
  const double radial =
      bessel_j(nu(qn), std::sqrt(espec.epsilon) * s.r) / std::sqrt(s.r);
  return radial * angular_spinor(qn, s.theta, s.phi);
}

Column psi_spin_zero_energy(cplx a, cplx b, const Vec3& p) {
  if (a == cplx(0.0) && b == cplx(0.0)) {
    throw Error(ErrorKind::kDegenerate,
                "psi_spin_zero_energy: a and b are both zero");
  }
  require_radius(p, "psi_spin_zero_energy");
  const double r = norm(p);
  const cplx i(0.0, 1.0);
  return Column(2, {(a * p.z + b * (p.x - i * p.y)) / r,
                    (a * (p.x + i * p.y) - b * p.z) / r});
}

double radial_negative_energy(double k, int which, double sqrt_neg_eps,
                              double r) {
  if (which != 1 && which != 2) {
    throw Error(ErrorKind::kUsage, "radial_negative_energy: which is 1 or 2");
  }
  if (k < 0.0 || !(sqrt_neg_eps > 0.0) || !(r > 0.0)) {
    throw Error(ErrorKind::kDomain,
                "radial_negative_energy: need kappa >= 0, sqrt(-eps) > 0, r > 0");
  }
  if (which == 2 && near_integer(2.0 * s_of_kappa(k))) {
    constexpr double kEps = 1e-6;
    const double up = radial_branch(k + kEps, 2, sqrt_neg_eps, r);
    if (k >= kEps) {
      return 0.5 * (up + radial_branch(k - kEps, 2, sqrt_neg_eps, r));
    }
    // kappa = 0 sits on the edge of the admissible range: extrapolate from
    // the right instead.
    return 2.0 * up - radial_branch(k + 2.0 * kEps, 2, sqrt_neg_eps, r);
  }
  return radial_branch(k, which, sqrt_neg_eps, r);
}

GrowthReport negative_energy_growth(double k, double sqrt_neg_eps,
                                    double r_near, double r_far) {
  GrowthReport g;
  g.w1 = std::fabs(radial_negative_energy(k, 1, sqrt_neg_eps, r_far)) /
         std::fabs(radial_negative_energy(k, 1, sqrt_neg_eps, r_near));
  g.w2 = std::fabs(radial_negative_energy(k, 2, sqrt_neg_eps, r_far)) /
         std::fabs(radial_negative_energy(k, 2, sqrt_neg_eps, r_near));
  return g;
}

double MagQN::nu() const { return std::fabs(m + flux_ratio); }

cplx psi_magnetic(const MagQN& qn, const EnergySpec& espec, const Vec3& p,
                  cplx c1, cplx c2) {
  if (!(espec.epsilon > 0.0)) {
    throw Error(ErrorKind::kDomain, "psi_magnetic: need eps > 0");
  }
  const double rho = std::hypot(p.x, p.y);
  if (rho < kRhoFloor) {
    throw Error(ErrorKind::kSingularity, "psi_magnetic: point on the axis");
  }
  const double phi = std::atan2(p.y, p.x);
  const cplx z_part = c1 * std::polar(1.0, qn.kz * p.z) +
                      c2 * std::polar(1.0, -qn.kz * p.z);
  return bessel_j(qn.nu(), std::sqrt(espec.epsilon) * rho) *
         std::polar(1.0, qn.m * phi) * z_part;
}

cplx magnetic_phase_factor(double flux_ratio, const Vec3& p) {
  if (std::hypot(p.x, p.y) < kRhoFloor) {
    throw Error(ErrorKind::kSingularity,
                "magnetic_phase_factor: point on the axis");
  }
  return std::polar(1.0, -flux_ratio * std::atan2(p.y, p.x));
}

cplx psi_magnetic_phase(double flux_ratio, const Vec3& kvec, const Vec3& p,
                        cplx c1, cplx c2) {
  return psi_free_plane(kvec, c1, c2, p) * magnetic_phase_factor(flux_ratio, p);
}

cplx psi_free(int l, int m, const EnergySpec& espec, const Vec3& p) {
  if (!(espec.epsilon > 0.0)) {
    throw Error(ErrorKind::kDomain, "psi_free: need eps > 0");
  }
  require_radius(p, "psi_free");
  const SphericalPoint s = to_spherical(p);
  return bessel_j(l + 0.5, std::sqrt(espec.epsilon) * s.r) / std::sqrt(s.r) *
         sph_harm(l, m, s.theta, s.phi);
}

cplx psi_free_plane(const Vec3& kvec, cplx c1, cplx c2, const Vec3& p) {
  const double kr = dot(kvec, p);
  return c1 * std::polar(1.0, kr) + c2 * std::polar(1.0, -kr);
}

Vec3 ab_coupling(double flux_ratio, const Vec3& p, const UnitConventions& units) {
  const double rho2 = p.x * p.x + p.y * p.y;
  if (rho2 < kRhoFloor * kRhoFloor) {
    throw Error(ErrorKind::kSingularity, "ab_coupling: point on the axis");
  }
  const double s = flux_ratio * units.hbar / rho2;
  return {-s * p.y, s * p.x, 0.0};
}

OpVec3 canonical_momentum(double g, const UnitConventions& units) {
  const MatVec3 spin = spin_half(units);
  const OpVec3 A = matrix_vec(
      [g, spin](const Vec3& q) { return spin_potential(g, spin, q); });
  return momentum_vec(units) - A;
}

Operator h_spin(double g, const UnitConventions& units) {
  const OpVec3 pi = canonical_momentum(g, units);
  return (0.5 / units.mass) * dot(pi, pi);
}

Operator h_spin_expanded(double g, const UnitConventions& units) {
  const OpVec3 p = momentum_vec(units);
  const double hb = units.hbar;
  const Operator inv_r2 =
      Operator::multiply([](const Vec3& q) -> cplx { return 1.0 / dot(q, q); });
  const Operator ls = l_dot_s(units);
  return (0.5 / units.mass) *
         (dot(p, p) + (2.0 * g) * (inv_r2 * ls) +
          (0.5 * g * g * hb * hb) * inv_r2);
}

OpVec3 magnetic_momentum(double flux_ratio, const UnitConventions& units) {
  OpVec3 a;
  for (int i = 0; i < 3; ++i) {
    a[i] = Operator::multiply([flux_ratio, units, i](const Vec3& q) -> cplx {
      return ab_coupling(flux_ratio, q, units)[i];
    });
  }
  return momentum_vec(units) + a;
}

Operator h_magnetic(double flux_ratio, const UnitConventions& units) {
  const OpVec3 pi = magnetic_momentum(flux_ratio, units);
  return (0.5 / units.mass) * dot(pi, pi);
}

Operator h_free(const UnitConventions& units, int) {
  const OpVec3 p = momentum_vec(units);
  return (0.5 / units.mass) * dot(p, p);
}

Operator l_dot_s(const UnitConventions& units) {
  return dot(constant_vec(spin_half(units)), angular_momentum_vec(units));
}

SpinorField spin_field(const SpinQN& qn, const EnergySpec& espec) {
  return {2, [qn, espec](const Vec3& p) { return psi_spin(qn, espec, p); }};
}

SpinorField zero_energy_field(cplx a, cplx b) {
  return {2, [a, b](const Vec3& p) { return psi_spin_zero_energy(a, b, p); }};
}

SpinorField scalar_field(std::function<cplx(const Vec3&)> f) {
  return {1, [f = std::move(f)](const Vec3& p) { return Column(1, {f(p)}); }};
}

}  // namespace spinab
