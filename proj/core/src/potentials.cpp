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

#include "spinab/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinab/diffops.hpp"
#include "spinab/errors.hpp"

namespace spinab {
namespace {

void require_radius(const Vec3& p, const char* what) {
  if (!(norm(p) >= kRMin)) {
    throw Error(ErrorKind::kSingularity,
                std::string(what) + ": |r| below the 0.05 floor");
  }
}

void require_sin(double theta, const char* what) {
  if (std::fabs(std::sin(theta)) < kSinFloor) {
    throw Error(ErrorKind::kSingularity,
                std::string(what) + ": |sin theta| below the 0.05 floor");
  }
}

}  // namespace

MatVec3 spin_potential(double g, const MatVec3& spin, const Vec3& p) {
  require_radius(p, "spin_potential");
  return (g / dot(p, p)) * cross(p, spin);
}

SpinMatrix scalar_potential(double g, const MatVec3& spin, const Vec3& p) {
  require_radius(p, "scalar_potential");
  return (std::sqrt(2.0) * g / dot(p, p)) * dot(p, spin);
}

Vec3 wu_yang(WuYangRegion region, double g_mono, const SphericalPoint& p) {
  if (!(p.r >= kRMin)) {
    throw Error(ErrorKind::kSingularity, "wu_yang: r below the 0.05 floor");
  }
  double a_phi;
  if (region == WuYangRegion::kA) {
    if (!(p.theta < kPi - kPoleEps)) {
      throw Error(ErrorKind::kSingularity,
                  "wu_yang: region a is singular at the south pole");
    }
    // (1 - cos)/sin written as tan(theta/2) to keep the theta -> 0 limit exact.
    a_phi = g_mono / p.r * std::tan(0.5 * p.theta);
  } else {
    if (!(p.theta > kPoleEps)) {
      throw Error(ErrorKind::kSingularity,
                  "wu_yang: region b is singular at the north pole");
    }
    a_phi = -g_mono / p.r / std::tan(0.5 * p.theta);
  }
  return from_spherical_components(p.theta, p.phi, 0.0, 0.0, a_phi);
}

Vec3 wu_yang(WuYangRegion region, double g_mono, const Vec3& p) {
  return wu_yang(region, g_mono, to_spherical(p));
}

double SolenoidSpec::flux() const { return B * kPi * r0 * r0; }

void SolenoidSpec::validate() const {
  if (!(r0 > 0.0) || !std::isfinite(B)) {
    throw Error(ErrorKind::kUsage, "SolenoidSpec: need r0 > 0 and finite B");
  }
}

SolenoidSpec SolenoidSpec::from_flux(double flux, double r0) {
  SolenoidSpec s;
  s.r0 = r0;
  s.validate();
  s.B = flux / (kPi * r0 * r0);
  return s;
}

Vec3 magnetic_ab(const SolenoidSpec& spec, const Vec3& p) {
  spec.validate();
  const double rho = std::hypot(p.x, p.y);
  if (rho < kRhoFloor) {
    throw Error(ErrorKind::kSingularity, "magnetic_ab: point on the axis");
  }
  if (rho == spec.r0) {
    throw Error(ErrorKind::kDomain, "magnetic_ab: point on the solenoid wall");
  }
  // e_phi = (-y, x, 0)/rho
  const double scale = rho < spec.r0 ? 0.5 * spec.B
                                     : spec.flux() / (2.0 * kPi * rho * rho);
  return {-scale * p.y, scale * p.x, 0.0};
}

const char* to_string(GLabel label) {
  switch (label) {
    case GLabel::kCaseI: return "case_i";
    case GLabel::kCaseII2A: return "case_ii2_a";
    case GLabel::kCaseII2B: return "case_ii2_b";
    case GLabel::kCaseII3: return "case_ii3";
    case GLabel::kCaseIIDA: return "case_iiD_a";
    case GLabel::kCaseIIDB: return "case_iiD_b";
    case GLabel::kCaseIIDC: return "case_iiD_c";
    case GLabel::kCustom: return "custom";
  }
  return "unknown";
}

GLabel parse_glabel(const std::string& name) {
  for (GLabel l : {GLabel::kCaseI, GLabel::kCaseII2A, GLabel::kCaseII2B,
                   GLabel::kCaseII3, GLabel::kCaseIIDA, GLabel::kCaseIIDB,
                   GLabel::kCaseIIDC, GLabel::kCustom}) {
    if (name == to_string(l)) return l;
  }
  throw Error(ErrorKind::kUsage, "unknown G family '" + name + "'");
}

Vec3 GField::cartesian(const Vec3& p) const {
  const SphericalPoint s = to_spherical(p);
  const GComponents c = eval(s);
  return from_spherical_components(s.theta, s.phi, c.r, c.theta, c.phi);
}

GField g_family(GLabel label, const GParams& params) {
  GField G;
  G.label = label;
  G.params = params;
  const GParams& q = G.params;
  auto theta_form = [](double gr, double theta, double C) {
    require_sin(theta, "g_family");
    return gr * (std::cos(theta) + C) / std::sin(theta);
  };
  switch (label) {
    case GLabel::kCaseI:
      G.eval = [q](const SphericalPoint& s) {
        require_sin(s.theta, "g_family");
        return GComponents{0.0, q.w1(s.r, s.phi) / std::sin(s.theta),
                           q.w2(s.r, s.theta)};
      };
      break;
    case GLabel::kCaseII2A:
    case GLabel::kCaseII2B: {
      const double C = label == GLabel::kCaseII2A ? -1.0 : 1.0;
      G.params.C = C;
      G.eval = [q, C, theta_form](const SphericalPoint& s) {
        const double gr = q.g_r(s.r);
        return GComponents{gr, theta_form(gr, s.theta, C), 0.0};
      };
      break;
    }
    case GLabel::kCaseII3:
      G.eval = [q](const SphericalPoint& s) {
        const double gr = q.g_r(s.r);
        return GComponents{gr, 0.0, -(s.phi + q.C) * gr * std::sin(s.theta)};
      };
      break;
    case GLabel::kCaseIIDA:
      G.eval = [q, theta_form](const SphericalPoint& s) {
        const double gr = q.g_r(s.r);
        return GComponents{
            gr, q.mu * theta_form(gr, s.theta, q.C1),
            (q.mu - 1.0) * gr * std::sin(s.theta) * (s.phi + q.C2)};
      };
      break;
    case GLabel::kCaseIIDB:
      G.eval = [q](const SphericalPoint& s) {
        const double gr = q.g_r(s.r);
        const double t = q.t(s.r);
        return GComponents{gr, t,
                           -gr * std::sin(s.theta) * (s.phi + q.C1) -
                               std::cos(s.theta) * t * (s.phi + q.C2)};
      };
      break;
    case GLabel::kCaseIIDC:
      G.eval = [q, theta_form](const SphericalPoint& s) {
        const double gr = q.g_r(s.r);
        return GComponents{gr, theta_form(gr, s.theta, q.C), q.w(s.r, s.theta)};
      };
      break;
    case GLabel::kCustom:
      if (!q.custom) {
        throw Error(ErrorKind::kUsage, "g_family: custom needs params.custom");
      }
      G.eval = q.custom;
      break;
  }
  return G;
}

Theorem1Report check_theorem1(const GField& G, const std::vector<Vec3>& samples,
                              double h) {
  if (!(h > 0.0)) throw Error(ErrorKind::kUsage, "check_theorem1: h <= 0");
  Theorem1Report rep;
  auto r_dot_g = [&](const Vec3& q) { return dot(q, G.cartesian(q)); };
  for (const Vec3& p : samples) {
    Vec3 grad;
    double div = 0.0;
    for (int a = 0; a < 3; ++a) {
      grad[a] = central_diff(r_dot_g, p, a, h, 4);
      div += central_diff([&](const Vec3& q) { return G.cartesian(q)[a]; }, p,
                          a, h, 4);
    }
    rep.max_residual_cond =
        std::max(rep.max_residual_cond, norm(grad - div * p));
    const Vec3 g = G.cartesian(p);
    rep.max_residual_abelian = std::max(rep.max_residual_abelian, norm(cross(g, g)));
  }
  return rep;
}

Vec3 extract_potential(const GField& G, const SphericalPoint& p, double coeff) {
  if (!(p.r >= kRMin)) {
    throw Error(ErrorKind::kSingularity,
                "extract_potential: r below the 0.05 floor");
  }
  const GComponents c = G.eval(p);
  return from_spherical_components(p.theta, p.phi, 0.0, -coeff / p.r * c.phi,
                                   coeff / p.r * c.theta);
}

FieldTensor field_tensor(double g, const MatVec3& spin, const Vec3& p,
                         const UnitConventions& units, double h) {
  units.validate();
  require_radius(p, "field_tensor");
  const int dim = spin.dim();
  const double r2 = dot(p, p);
  const double r4 = r2 * r2;
  const SpinMatrix rs = dot(p, spin);
  const cplx minus_i_over_hbar(0.0, -1.0 / units.hbar);

  FieldTensor out;
  out.B_closed = MatVec3{(g * (g - 2.0) / r4 * p.x) * rs,
                         (g * (g - 2.0) / r4 * p.y) * rs,
                         (g * (g - 2.0) / r4 * p.z) * rs};

  const MatVec3 A = spin_potential(g, spin, p);
  const MatVecFn a_fn = [&](const Vec3& q) { return spin_potential(g, spin, q); };
  out.B_numeric = fd_curl(a_fn, p, h) + minus_i_over_hbar * cross(A, A);

  const double s2 = std::sqrt(2.0);
  out.E_closed = MatVec3{
      (s2 * (g * g - g) / r2) * spin[0] + (s2 * (2.0 * g - g * g) / r4 * p.x) * rs,
      (s2 * (g * g - g) / r2) * spin[1] + (s2 * (2.0 * g - g * g) / r4 * p.y) * rs,
      (s2 * (g * g - g) / r2) * spin[2] + (s2 * (2.0 * g - g * g) / r4 * p.z) * rs};

  const SpinMatrix phi = scalar_potential(g, spin, p);
  const MatrixFn phi_fn = [&](const Vec3& q) {
    return scalar_potential(g, spin, q);
  };
  const MatVec3 grad_phi = fd_gradient(phi_fn, p, h);
  MatVec3 comm = MatVec3::zero(dim);
  for (int k = 0; k < 3; ++k) comm[k] = commutator(phi, A[k]);
  out.E_numeric = (-1.0) * grad_phi + minus_i_over_hbar * comm;

  out.E_reduced_form =
      MatVec3{(-p.x / r2) * phi, (-p.y / r2) * phi, (-p.z / r2) * phi};
  return out;
}

}  // namespace spinab
