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

#include "spinab/diffops.hpp"
#include "spinab/geometry.hpp"
#include "spinab/potentials.hpp"
#include "spinab/qalgebra.hpp"

namespace spinab {

// Branch A is j = l + 1/2 (K = l/2), branch B is j = l - 1/2 (K = -(l+1)/2).
enum class Branch { kA, kB };

const char* to_string(Branch b);

struct SpinQN {
  double g = 2.0;
  int l = 0;
  int m = 0;  // m_j = m + 1/2
  Branch branch = Branch::kA;

  // Shape checks only; m is validated by angular_spinor.
  void validate() const;
  double K() const;
};

double kappa(const SpinQN& qn);  // l(l+1) + 2gK + g^2/2
double nu(const SpinQN& qn);     // sqrt(1 + 4 kappa) / 2

// Normalized two-component spinor harmonic. Allowed m: branch A
// -l-1 <= m <= l, branch B -l <= m <= l-1; a component whose Y_lm would be
// out of range has a zero coefficient and is set to zero.
Column angular_spinor(const SpinQN& qn, double theta, double phi);

struct EnergySpec {
  double E = 1.0;
  double epsilon = 2.0;

  static EnergySpec spherical(double E, const UnitConventions& units = {});
  static EnergySpec cylindrical(double E, double kz,
                                const UnitConventions& units = {});
};

// N r^{-1/2} J_nu(sqrt(eps) r) Phi with N = 1. E < 0 throws
// RejectedBranchError carrying the growth of both hypergeometric branches.
Column psi_spin(const SpinQN& qn, const EnergySpec& espec, const Vec3& p);

// (1/r)[a z + b (x - iy); a (x + iy) - b z], the g = 2, E = 0 mode.
Column psi_spin_zero_energy(cplx a, cplx b, const Vec3& p);

// E < 0 radial candidates r^s e^{-k r} w_i with k = sqrt(-eps) and
// tau = 2 k r. which = 1 or 2. When gamma = 2s + 2 is an integer the second
// branch is taken as the symmetric limit kappa +/- 1e-6.
double radial_negative_energy(double kappa, int which, double sqrt_neg_eps,
                              double r);

struct GrowthReport {
  double w1 = 0.0;  // |R1(r_far)| / |R1(r_near)|
  double w2 = 0.0;
};

GrowthReport negative_energy_growth(double kappa, double sqrt_neg_eps = 0.25,
                                    double r_near = 20.0, double r_far = 80.0);

struct MagQN {
  int m = 0;
  double flux_ratio = 0.0;  // e Phi / (h c)
  double kz = 0.0;

  double nu() const;  // |m + flux_ratio|
};

// First method: J_nu(sqrt(eps) rho) e^{i m phi} (c1 e^{i kz z} + c2 e^{-i kz z}).
cplx psi_magnetic(const MagQN& qn, const EnergySpec& espec, const Vec3& p,
                  cplx c1 = 1.0, cplx c2 = 0.0);

// Second method: (c1 e^{ik.r} + c2 e^{-ik.r}) xi with
// xi = exp(-i flux_ratio atan2(y, x)).
cplx psi_magnetic_phase(double flux_ratio, const Vec3& kvec, const Vec3& p,
                        cplx c1 = 1.0, cplx c2 = 0.0);
cplx magnetic_phase_factor(double flux_ratio, const Vec3& p);

// J_{l+1/2}(sqrt(eps) r) / sqrt(r) Y_lm.
cplx psi_free(int l, int m, const EnergySpec& espec, const Vec3& p);
cplx psi_free_plane(const Vec3& kvec, cplx c1, cplx c2, const Vec3& p);

// (e/c) A_M outside a thin solenoid: flux_ratio hbar / rho e_phi.
Vec3 ab_coupling(double flux_ratio, const Vec3& p,
                 const UnitConventions& units = {});

// Operators. H_S = (p - A)^2 / 2M on 2-spinors (spin 1/2),
// H_M = (p + (e/c) A_M)^2 / 2M and H_0 = p^2 / 2M on scalar fields.
OpVec3 canonical_momentum(double g, const UnitConventions& units = {});
Operator h_spin(double g, const UnitConventions& units = {});
Operator h_spin_expanded(double g, const UnitConventions& units = {});
OpVec3 magnetic_momentum(double flux_ratio, const UnitConventions& units = {});
Operator h_magnetic(double flux_ratio, const UnitConventions& units = {});
Operator h_free(const UnitConventions& units = {}, int dim = 1);

// l.S for spin 1/2 on 2-spinors.
Operator l_dot_s(const UnitConventions& units = {});

// Field wrappers for op_apply.
SpinorField spin_field(const SpinQN& qn, const EnergySpec& espec);
SpinorField zero_energy_field(cplx a, cplx b);
SpinorField scalar_field(std::function<cplx(const Vec3&)> f);

}  // namespace spinab
