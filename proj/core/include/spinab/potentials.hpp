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

#include <functional>
#include <string>
#include <vector>

#include "spinab/geometry.hpp"
#include "spinab/qalgebra.hpp"

namespace spinab {

inline constexpr double kRMin = 0.05;       // radial floor for 1/r^n fields
inline constexpr double kSinFloor = 0.05;   // |sin theta| floor
inline constexpr double kRhoFloor = 1e-6;   // cylindrical-axis floor
inline constexpr double kPoleEps = 0.05;    // Wu-Yang patch margin

// A = g (r x S) / r^2, Cartesian components.
MatVec3 spin_potential(double g, const MatVec3& spin, const Vec3& p);

// phi = sqrt(2) g (r.S) / r^2. For spin 1/2 its square equals A.A.
SpinMatrix scalar_potential(double g, const MatVec3& spin, const Vec3& p);

enum class WuYangRegion { kA, kB };

// A_a = (g/r) tan(theta/2) e_phi, A_b = -(g/r) cot(theta/2) e_phi.
Vec3 wu_yang(WuYangRegion region, double g_mono, const SphericalPoint& p);
Vec3 wu_yang(WuYangRegion region, double g_mono, const Vec3& p);

struct SolenoidSpec {
  double B = 1.0;
  double r0 = 1.0;

  double flux() const;  // B pi r0^2
  void validate() const;
  static SolenoidSpec from_flux(double flux, double r0);
};

// Piecewise solenoid potential: B rho / 2 inside, flux / (2 pi rho) outside.
Vec3 magnetic_ab(const SolenoidSpec& spec, const Vec3& p);

enum class GLabel {
  kCaseI,
  kCaseII2A,
  kCaseII2B,
  kCaseII3,
  kCaseIIDA,
  kCaseIIDB,
  kCaseIIDC,
  kCustom,
};

const char* to_string(GLabel label);
GLabel parse_glabel(const std::string& name);

// Spherical components (G_r, G_theta, G_phi).
struct GComponents {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

using RadialFn = std::function<double(double)>;
using BivariateFn = std::function<double(double, double)>;

struct GParams {
  RadialFn g_r = [](double) { return -1.0; };
  double C = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;
  double mu = 0.5;
  BivariateFn w1 = [](double, double) { return 1.0; };  // W1(r, phi)
  BivariateFn w2 = [](double, double) { return 0.0; };  // W2(r, theta)
  RadialFn t = [](double) { return 1.0; };              // T(r)
  BivariateFn w = [](double, double) { return 0.0; };   // W(r, theta)
  std::function<GComponents(const SphericalPoint&)> custom;
};

struct GField {
  GLabel label = GLabel::kCustom;
  GParams params;
  std::function<GComponents(const SphericalPoint&)> eval;

  Vec3 cartesian(const Vec3& p) const;
};

// The closed-form families. case_ii2_a / case_ii2_b fix C = -1 / +1, which
// with G_r = -1 are the two Wu-Yang patches.
GField g_family(GLabel label, const GParams& params = {});

struct Theorem1Report {
  double max_residual_cond = 0.0;     // |grad(r.G) - r div G|
  double max_residual_abelian = 0.0;  // |G x G|
};

Theorem1Report check_theorem1(const GField& G, const std::vector<Vec3>& samples,
                              double h = 1e-4);

// A = c (r x G) / r^2 = (c/r)(G_theta e_phi - G_phi e_theta).
Vec3 extract_potential(const GField& G, const SphericalPoint& p,
                       double coeff = 1.0);

struct FieldTensor {
  MatVec3 B_closed;      // g(g-2)(r.S) r / r^4
  MatVec3 B_numeric;     // FD curl of A minus (i/hbar) A x A
  MatVec3 E_closed;      // from -grad(phi) - (i/hbar)[phi, A]
  MatVec3 E_numeric;     // the same definition with FD gradient
  MatVec3 E_reduced_form;  // -phi r / r^2
};

FieldTensor field_tensor(double g, const MatVec3& spin, const Vec3& p,
                         const UnitConventions& units = {}, double h = 1e-4);

}  // namespace spinab
