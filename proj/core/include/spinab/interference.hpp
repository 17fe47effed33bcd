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

#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "spinab/diffops.hpp"
#include "spinab/geometry.hpp"
#include "spinab/qalgebra.hpp"

namespace spinab {

using CVec3 = std::array<cplx, 3>;
using ComplexFn = std::function<cplx(const Vec3&)>;
using CVecField = std::function<CVec3(const Vec3&)>;

// Logarithmic gradient grad(psi)/psi by central differences (step h1).
CVec3 f_vector(const ComplexFn& psi, const Vec3& p, const FDScheme& scheme = {});

// One component chi = J_nu(sqrt(eps) r)/sqrt(r) P_l^m(cos theta) e^{i m phi}
// of the spin wavefunction. F1 uses m, F2 uses m + 1.
struct ChiSpec {
  double nu = 0.5;
  double epsilon = 2.0;
  int l = 1;
  int m = 0;
};

cplx chi_value(const ChiSpec& c, const Vec3& p);

// Closed form of grad(chi)/chi in Cartesian components:
// Re F = e_r[-1/2r + sqrt(eps)(J_{nu-1} - J_{nu+1})/(2 J_nu)]
//      + e_theta (1/r)[m cot(theta) + P_l^{m+1}/P_l^m],
// Im F = e_phi m/(r sin theta).
CVec3 f_vector_closed(const ChiSpec& c, const Vec3& p);

enum class PathKind { kClosedLoop, kOpenLeg };

struct PathSpec {
  PathKind kind = PathKind::kClosedLoop;
  std::function<Vec3(double)> at;  // t in [0, 1]
  int n_steps = 256;

  void validate() const;

  static PathSpec circle(const Vec3& center, double radius, int n_steps = 256);
  // Latitude circle of the sphere of radius r at polar angle theta.
  static PathSpec latitude(double r, double theta, int n_steps = 256);
  static PathSpec segment(const Vec3& a, const Vec3& b, int n_steps = 256);
};

// Composite trapezoid for the integral of F(r(t)).r'(t) dt. r'(t) comes from
// a fourth-order difference of the parametrization, so closed smooth loops
// converge spectrally.
cplx loop_integral(const CVecField& F, const PathSpec& path);

double p_ordinary(double delta1, double N);
// 2N^2[1 + cos(delta1 + delta2)], delta2 = -2 pi flux_ratio.
double p_magnetic(double delta1, double flux_ratio, double N);
double delta2_from_flux(double flux_ratio);
double flux_from_delta2(double delta2);

struct InterferenceParams {
  double mu1 = 0.0, mu2 = 0.0, mu3 = 0.0, mu4 = 0.0;
  int l = 1;
  int m = 1;
  cplx c1 = 1.0;
  cplx c2 = 0.5;  // figure mode: 1/(l+m+1)
  double N = 1.0;

  void validate() const;
  // c1 = 1, c2 = 1/(l+m+1) and N from N^2(|c1|^2 + |c2|^2) = 1.
  static InterferenceParams figure(double mu1, double mu2, double mu3,
                                  double mu4, int l, int m, bool normalized);
};

double normalized_N(cplx c1, cplx c2);

double p_spin(double delta, const InterferenceParams& params);

double visibility(double mu2_prime);
double p_ordinary_visibility(double delta, double mu2_prime, double N,
                             double mu1_prime = 0.0);

struct CurveSample {
  double delta = 0.0;
  double value = 0.0;
};

enum class CurveKind { kOrdinary, kMagnetic, kSpin };
const char* to_string(CurveKind k);
CurveKind parse_curve_kind(const std::string& s);

struct CurveParams {
  double N = 0.5;
  double delta2 = 0.0;  // magnetic kind only
  InterferenceParams spin;
};

struct DeltaGrid {
  double min = 0.0;
  double max = 4.0 * kPi;
  int count = 1024;
};

std::vector<CurveSample> curve(CurveKind kind, const CurveParams& params,
                               const DeltaGrid& grid);

double pearson_correlation(const std::vector<CurveSample>& a,
                           const std::vector<CurveSample>& b);

// mu values from Re F line integrals: mu1 = leg1 of F1, mu2 = loop of F1,
// mu3 = leg2 of F2, mu4 = loop of F2.
std::array<double, 4> mus_from_paths(const CVecField& F1, const CVecField& F2,
                                     const PathSpec& leg1, const PathSpec& leg2,
                                     const PathSpec& loop);

}  // namespace spinab
