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

#include "spinab/interference.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinab/errors.hpp"
#include "spinab/potentials.hpp"
#include "spinab/specfun.hpp"

namespace spinab {
namespace {

// P_l^m for -l <= m <= l, negative orders through
// P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.
double legendre_signed(int l, int m, double z) {
  if (std::abs(m) > l) return 0.0;
  if (m >= 0) return assoc_legendre(l, m, z);
  const int am = -m;
  double ratio = 1.0;
  for (int k = l - am + 1; k <= l + am; ++k) ratio /= k;
  const double sign = (am % 2 == 0) ? 1.0 : -1.0;
  return sign * ratio * assoc_legendre(l, am, z);
}

double dt_for(int n_steps) { return 1.0 / n_steps; }

Vec3 path_derivative(const std::function<Vec3(double)>& at, double t,
                     double h) {
  const Vec3 d1 = at(t + h) - at(t - h);
  const Vec3 d2 = at(t + 2.0 * h) - at(t - 2.0 * h);
  return (8.0 / (12.0 * h)) * d1 - (1.0 / (12.0 * h)) * d2;
}

}  // namespace

CVec3 f_vector(const ComplexFn& psi, const Vec3& p, const FDScheme& scheme) {
  scheme.validate();
  const cplx v = psi(p);
  if (std::abs(v) < 1e-10) {
    throw Error(ErrorKind::kNode, "f_vector: wavefunction vanishes here");
  }
  CVec3 out;
  for (int a = 0; a < 3; ++a) {
    out[a] = central_diff(psi, p, a, scheme.h1, scheme.order) / v;
  }
  return out;
}

cplx chi_value(const ChiSpec& c, const Vec3& p) {
  if (!(c.epsilon > 0.0)) throw Error(ErrorKind::kDomain, "chi_value: eps <= 0");
  if (std::abs(c.m) > c.l) {
    throw Error(ErrorKind::kDomain, "chi_value: need |m| <= l");
  }
  const SphericalPoint s = to_spherical(p);
  if (s.r < kRMin) {
    throw Error(ErrorKind::kSingularity, "chi_value: r below the 0.05 floor");
  }
  return bessel_j(c.nu, std::sqrt(c.epsilon) * s.r) / std::sqrt(s.r) *
         legendre_signed(c.l, c.m, std::cos(s.theta)) *
         std::polar(1.0, c.m * s.phi);
}

CVec3 f_vector_closed(const ChiSpec& c, const Vec3& p) {
  const SphericalPoint s = to_spherical(p);
  if (s.r < kRMin) {
    throw Error(ErrorKind::kSingularity, "f_vector_closed: r below floor");
  }
  const double st = std::sin(s.theta);
  if (std::fabs(st) < kSinFloor) {
    throw Error(ErrorKind::kSingularity, "f_vector_closed: too near the axis");
  }
  const double k = std::sqrt(c.epsilon);
  const double x = k * s.r;
  const double jn = bessel_j(c.nu, x);
  const double plm = legendre_signed(c.l, c.m, std::cos(s.theta));
  if (std::fabs(jn) < 1e-14 || std::fabs(plm) < 1e-14) {
    throw Error(ErrorKind::kNode, "f_vector_closed: chi vanishes here");
  }
  const double f_r =
      -0.5 / s.r + k * (bessel_j(c.nu - 1.0, x) - bessel_j(c.nu + 1.0, x)) /
                       (2.0 * jn);
  const double f_t =
      (c.m * std::cos(s.theta) / st +
       legendre_signed(c.l, c.m + 1, std::cos(s.theta)) / plm) /
      s.r;
  const double f_p = c.m / (s.r * st);
  const SphericalFrame fr = spherical_frame(s.theta, s.phi);
  const Vec3 re = f_r * fr.e_r + f_t * fr.e_theta;
  const Vec3 im = f_p * fr.e_phi;
  return {cplx(re.x, im.x), cplx(re.y, im.y), cplx(re.z, im.z)};
}

void PathSpec::validate() const {
  if (!at) throw Error(ErrorKind::kPath, "PathSpec: missing parametrization");
  if (n_steps < 64) throw Error(ErrorKind::kPath, "PathSpec: n_steps < 64");
  if (kind == PathKind::kClosedLoop && norm(at(1.0) - at(0.0)) > 1e-12) {
    throw Error(ErrorKind::kPath, "PathSpec: closed loop does not close");
  }
}

PathSpec PathSpec::circle(const Vec3& center, double radius, int n_steps) {
  PathSpec p;
  p.kind = PathKind::kClosedLoop;
  p.n_steps = n_steps;
  p.at = [center, radius](double t) {
    const double a = 2.0 * kPi * t;
    return center + Vec3{radius * std::cos(a), radius * std::sin(a), 0.0};
  };
  return p;
}

PathSpec PathSpec::latitude(double r, double theta, int n_steps) {
  PathSpec p;
  p.kind = PathKind::kClosedLoop;
  p.n_steps = n_steps;
  // Start at phi = -pi + pi/2 so the loop never sits on the atan2 cut at a
  // sample node.
  p.at = [r, theta](double t) {
    return to_cartesian({r, theta, 2.0 * kPi * t - 0.5 * kPi});
  };
  return p;
}

PathSpec PathSpec::segment(const Vec3& a, const Vec3& b, int n_steps) {
  PathSpec p;
  p.kind = PathKind::kOpenLeg;
  p.n_steps = n_steps;
  p.at = [a, b](double t) { return a + t * (b - a); };
  return p;
}

cplx loop_integral(const CVecField& F, const PathSpec& path) {
  path.validate();
  const int n = path.n_steps;
  const double dt = dt_for(n);
  const double h = 1e-3 * dt;
  auto integrand = [&](double t) -> cplx {
    const Vec3 q = path.at(t);
    const Vec3 d = path_derivative(path.at, t, h);
    CVec3 f;
    try {
      f = F(q);
    } catch (const Error& e) {
      throw Error(ErrorKind::kPath,
                  std::string("loop_integral: field failed on path: ") + e.what());
    }
    return f[0] * d.x + f[1] * d.y + f[2] * d.z;
  };
  cplx sum = 0.0;
  if (path.kind == PathKind::kClosedLoop) {
    // Periodic integrand: the end weights merge into one full-weight node.
    for (int i = 0; i < n; ++i) sum += integrand(i * dt);
  } else {
    sum = 0.5 * (integrand(0.0) + integrand(1.0));
    for (int i = 1; i < n; ++i) sum += integrand(i * dt);
  }
  return sum * dt;
}

double p_ordinary(double delta1, double N) {
  return 2.0 * N * N * (1.0 + std::cos(delta1));
}

double delta2_from_flux(double flux_ratio) { return -2.0 * kPi * flux_ratio; }
double flux_from_delta2(double delta2) { return -delta2 / (2.0 * kPi); }

double p_magnetic(double delta1, double flux_ratio, double N) {
  return 2.0 * N * N * (1.0 + std::cos(delta1 + delta2_from_flux(flux_ratio)));
}

void InterferenceParams::validate() const {
  if (m == 0) {
    throw Error(ErrorKind::kDomain,
                "p_spin: m = 0 leaves the phase ratio (m+1)/m undefined");
  }
  if (l < 0) throw Error(ErrorKind::kDomain, "p_spin: l must be >= 0");
}

double normalized_N(cplx c1, cplx c2) {
  const double s = std::norm(c1) + std::norm(c2);
  if (!(s > 0.0)) throw Error(ErrorKind::kDegenerate, "normalized_N: c1 = c2 = 0");
  return 1.0 / std::sqrt(s);
}

InterferenceParams InterferenceParams::figure(double mu1, double mu2, double mu3,
                                             double mu4, int l, int m,
                                             bool normalized) {
  InterferenceParams p;
  p.mu1 = mu1;
  p.mu2 = mu2;
  p.mu3 = mu3;
  p.mu4 = mu4;
  p.l = l;
  p.m = m;
  if (l + m + 1 == 0) {
    throw Error(ErrorKind::kDomain, "p_spin: l + m + 1 = 0");
  }
  p.c1 = 1.0;
  p.c2 = 1.0 / static_cast<double>(l + m + 1);
  p.N = normalized ? normalized_N(p.c1, p.c2) : 1.0;
  return p;
}

double p_spin(double delta, const InterferenceParams& q) {
  q.validate();
  const double ratio = static_cast<double>(q.m + 1) / q.m;
  const double t1 = std::norm(q.c1) * std::exp(2.0 * q.mu1) *
                    (1.0 + std::exp(2.0 * q.mu2) +
                     2.0 * std::exp(q.mu2) * std::cos(delta));
  const double t2 = std::norm(q.c2) * std::exp(2.0 * q.mu3) *
                    (1.0 + std::exp(2.0 * q.mu4) +
                     2.0 * std::exp(q.mu4) * std::cos(ratio * delta));
  return q.N * q.N * (t1 + t2);
}

double visibility(double mu2_prime) {
  // 2x/(1+x^2) with x = e^mu, written symmetrically in mu.
  return 1.0 / std::cosh(mu2_prime);
}

double p_ordinary_visibility(double delta, double mu2_prime, double N,
                             double mu1_prime) {
  return N * N * std::exp(2.0 * mu1_prime) * (1.0 + std::exp(2.0 * mu2_prime)) *
         (1.0 + visibility(mu2_prime) * std::cos(delta));
}

const char* to_string(CurveKind k) {
  switch (k) {
    case CurveKind::kOrdinary: return "ordinary";
    case CurveKind::kMagnetic: return "magnetic";
    case CurveKind::kSpin: return "spin";
  }
  return "unknown";
}

CurveKind parse_curve_kind(const std::string& s) {
  if (s == "ordinary") return CurveKind::kOrdinary;
  if (s == "magnetic") return CurveKind::kMagnetic;
  if (s == "spin") return CurveKind::kSpin;
  throw Error(ErrorKind::kUsage, "unknown curve kind '" + s + "'");
}

std::vector<CurveSample> curve(CurveKind kind, const CurveParams& params,
                               const DeltaGrid& grid) {
  if (grid.count < 2) throw Error(ErrorKind::kUsage, "curve: need count >= 2");
  if (!(grid.max > grid.min)) {
    throw Error(ErrorKind::kUsage, "curve: need max > min");
  }
  if (kind == CurveKind::kSpin) params.spin.validate();
  const double flux = flux_from_delta2(params.delta2);
  std::vector<CurveSample> out(grid.count);
  const double step = (grid.max - grid.min) / (grid.count - 1);
  for (int i = 0; i < grid.count; ++i) {
    const double d = i + 1 == grid.count ? grid.max : grid.min + i * step;
    double v = 0.0;
    switch (kind) {
      case CurveKind::kOrdinary: v = p_ordinary(d, params.N); break;
      case CurveKind::kMagnetic: v = p_magnetic(d, flux, params.N); break;
      case CurveKind::kSpin: v = p_spin(d, params.spin); break;
    }
    out[i] = {d, v};
  }
  return out;
}

double pearson_correlation(const std::vector<CurveSample>& a,
                           const std::vector<CurveSample>& b) {
  if (a.size() != b.size() || a.size() < 2) {
    throw Error(ErrorKind::kShape, "pearson_correlation: size mismatch");
  }
  const double n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    ma += a[i].value;
    mb += b[i].value;
  }
  ma /= n;
  mb /= n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double da = a[i].value - ma, db = b[i].value - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (!(saa > 0.0 && sbb > 0.0)) {
    throw Error(ErrorKind::kDegenerate, "pearson_correlation: flat curve");
  }
  return sab / std::sqrt(saa * sbb);
}

std::array<double, 4> mus_from_paths(const CVecField& F1, const CVecField& F2,
                                     const PathSpec& leg1, const PathSpec& leg2,
                                     const PathSpec& loop) {
  return {loop_integral(F1, leg1).real(), loop_integral(F1, loop).real(),
          loop_integral(F2, leg2).real(), loop_integral(F2, loop).real()};
}

}  // namespace spinab
