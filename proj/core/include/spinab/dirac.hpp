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

#include <string>
#include <vector>

#include "spinab/diffops.hpp"
#include "spinab/qalgebra.hpp"

namespace spinab {

// Index layout of the 8-component space: a*4 + b*2 + c with a the Dirac
// (upper/lower) slot, b the particle spin and c the source spin.
inline constexpr int kDiracDim = 8;

MatVec3 sigma_source();    // sigma_1 = 1_4 (x) sigma
MatVec3 sigma_particle();  // sigma_2 = 1_2 (x) sigma (x) 1_2
MatVec3 alpha8();          // sigma_x (x) sigma (x) 1_2
SpinMatrix beta8();        // sigma_z (x) 1_2 (x) 1_2

// g r x S_1 / r^2 with S_1 = hbar sigma_1 / 2, as 8x8 matrices.
MatVec3 source_potential(double g, const Vec3& p,
                         const UnitConventions& units = {});

struct DiracHamiltonian {
  Operator kinetic;  // alpha . p
  Operator dm;       // -alpha . A, the DM-like contraction
  Operator mass;     // beta M
  Operator full;
};

DiracHamiltonian dirac_hamiltonian(double g, double M,
                                   const UnitConventions& units = {});

// -(g hbar / 2 r^2) sigma_x (x) r.(sigma_1 x sigma_2), built directly.
SpinMatrix dm_contraction(double g, const Vec3& p,
                          const UnitConventions& units = {});

// 1 (x) [p^2 + g^2 hbar^2/2r^2 + (g hbar/r^2) sigma_1.l
//        - (hbar^2 g (g-2)/2r^4)(r.sigma_1)(r.sigma_2)] + beta^2 M^2
Operator dirac_square_rhs(double g, double M,
                          const UnitConventions& units = {});

struct ResidualReport {
  double max_residual = 0.0;
  int samples = 0;
};

ResidualReport dirac_square_check(double g, double M,
                                  const std::vector<SpinorField>& fields,
                                  const std::vector<Vec3>& points,
                                  const FDScheme& scheme = {},
                                  const UnitConventions& units = {});

struct InteractionTerms {
  Operator h1;  // A.p
  Operator h2;  // p.A
  Operator h3;  // A^2
  Operator h4;  // i sigma_2.(A x p)
  Operator h5;  // i sigma_2.(p x A)
  Operator h6;  // i sigma_2.(A x A)
  // Closed or expanded forms of the same terms.
  Operator h1_closed;     // -(g hbar / 2r^2) sigma_1.l
  Operator h3_closed;     // g^2 hbar^2 / 2r^2
  Operator h4_expanded;   // three-part form with l.(sigma_1 x sigma_2)
  Operator h5_closed;     // -h4 - hbar^2 g (r.s1)(r.s2)/r^4
  Operator h6_closed;     // -(hbar^2 g^2/2r^4)(r.s1)(r.s2)
  // -h4 - h5 + h6, the combination entering the square.
  Operator cross_term;
  Operator cross_term_closed;  // -(hbar^2 g(g-2)/2r^4)(r.s1)(r.s2)
};

InteractionTerms interaction_terms(double g,
                                   const UnitConventions& units = {});

// l.(s1 x s2) and (r.s1)(p.s2) - (r.s2)(p.s1).
Operator l_dot_s1_cross_s2(const UnitConventions& units = {});
Operator l_dot_s1_cross_s2_expanded(const UnitConventions& units = {});

enum class InteractionLabel {
  kSpinSpinExchange,
  kSpinOrbital,
  kDmType,
  kDipoleDipole,
  kGeneralizedSpinOrbital,
  kTensorForce,
};

const char* to_string(InteractionLabel label);

struct InteractionTerm {
  InteractionLabel label;
  Operator evaluator;
  // Position-only terms also carry their matrix; empty for l-bearing ones.
  MatrixFn matrix;
};

std::vector<InteractionTerm> interaction_catalogue(
    const UnitConventions& units = {});

struct HeisenbergReport {
  double velocity = 0.0;  // (1/i hbar)[r, H_S] vs Pi / M
  double force = 0.0;     // [Pi, Pi^2] vs i hbar (Pi x B - B x Pi)
  int samples = 0;
};

// Checks on two-component fields with spin 1/2.
HeisenbergReport heisenberg_checks(double g,
                                   const std::vector<SpinorField>& fields,
                                   const std::vector<Vec3>& points,
                                   const FDScheme& scheme = {},
                                   const UnitConventions& units = {});

}  // namespace spinab
