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

#include "spinab/dirac.hpp"

#include <algorithm>
#include <cmath>

#include "spinab/potentials.hpp"
#include "spinab/spectra.hpp"

namespace spinab {
namespace {

SpinMatrix id(int n) { return SpinMatrix::identity(n); }

SpinMatrix sigma_x() { return pauli().x(); }
SpinMatrix sigma_z() { return pauli().z(); }

double r2_of(const Vec3& q) { return dot(q, q); }

// (r.sigma_1)(r.sigma_2) / r^4 at q.
SpinMatrix rs1_rs2_over_r4(const Vec3& q) {
  const double r2 = r2_of(q);
  return (1.0 / (r2 * r2)) *
         (dot(q, sigma_source()) * dot(q, sigma_particle()));
}

Operator inv_r2_op() {
  return Operator::multiply([](const Vec3& q) -> cplx { return 1.0 / r2_of(q); });
}

OpVec3 source_potential_vec(double g, const UnitConventions& units) {
  return matrix_vec(
      [g, units](const Vec3& q) { return source_potential(g, q, units); });
}

}  // namespace

MatVec3 sigma_source() { return tensor(id(4), pauli()); }

MatVec3 sigma_particle() { return tensor(tensor(id(2), pauli()), id(2)); }

MatVec3 alpha8() { return tensor(tensor(sigma_x(), pauli()), id(2)); }

SpinMatrix beta8() { return tensor(tensor(sigma_z(), id(2)), id(2)); }

MatVec3 source_potential(double g, const Vec3& p,
                         const UnitConventions& units) {
  return spin_potential(g, (0.5 * units.hbar) * sigma_source(), p);
}

DiracHamiltonian dirac_hamiltonian(double g, double M,
                                   const UnitConventions& units) {
  DiracHamiltonian h;
  const MatVec3 alpha = alpha8();
  h.kinetic = dot(constant_vec(alpha), momentum_vec(units));
  h.dm = Operator::matrix([g, units, alpha](const Vec3& q) {
    return -dot(alpha, source_potential(g, q, units));
  });
  h.mass = Operator::constant(cplx(M, 0.0) * beta8());
  h.full = h.kinetic + h.dm + h.mass;
  return h;
}

SpinMatrix dm_contraction(double g, const Vec3& p,
                          const UnitConventions& units) {
  const SpinMatrix sx = tensor(tensor(sigma_x(), id(2)), id(2));
  const SpinMatrix r_s1xs2 = dot(p, cross(sigma_source(), sigma_particle()));
  return (-0.5 * g * units.hbar / r2_of(p)) * (sx * r_s1xs2);
}

Operator dirac_square_rhs(double g, double M, const UnitConventions& units) {
  const double hb = units.hbar;
  const OpVec3 p = momentum_vec(units);
  const Operator s1_l =
      dot(constant_vec(sigma_source()), angular_momentum_vec(units));
  const Operator cross = Operator::matrix([g, hb](const Vec3& q) {
    return (-0.5 * hb * hb * g * (g - 2.0)) * rs1_rs2_over_r4(q);
  });
  return dot(p, p) + (0.5 * g * g * hb * hb) * inv_r2_op() +
         (g * hb) * (inv_r2_op() * s1_l) + cross +
         Operator::scalar(M * M);
}

ResidualReport dirac_square_check(double g, double M,
                                  const std::vector<SpinorField>& fields,
                                  const std::vector<Vec3>& points,
                                  const FDScheme& scheme,
                                  const UnitConventions& units) {
  const DiracHamiltonian h = dirac_hamiltonian(g, M, units);
  const Operator lhs = h.full * h.full;
  const Operator rhs = dirac_square_rhs(g, M, units);
  ResidualReport rep;
  for (const SpinorField& f : fields) {
    for (const Vec3& q : points) {
      const Column a = op_apply(lhs, f, q, scheme);
      const Column b = op_apply(rhs, f, q, scheme);
      rep.max_residual =
          std::max(rep.max_residual, scaled_residual(a, b, f(q).norm()));
      ++rep.samples;
    }
  }
  return rep;
}

InteractionTerms interaction_terms(double g, const UnitConventions& units) {
  const double hb = units.hbar;
  const cplx I(0.0, 1.0);
  const OpVec3 A = source_potential_vec(g, units);
  const OpVec3 p = momentum_vec(units);
  const OpVec3 s2 = constant_vec(sigma_particle());
  const MatVec3 s1m = sigma_source();
  const MatVec3 s2m = sigma_particle();

  InteractionTerms t;
  t.h1 = dot(A, p);
  t.h2 = dot(p, A);
  t.h3 = dot(A, A);
  t.h4 = I * dot(s2, cross(A, p));
  t.h5 = I * dot(s2, cross(p, A));
  t.h6 = I * dot(s2, cross(A, A));

  t.h1_closed = (-0.5 * g * hb) *
                (inv_r2_op() * dot(constant_vec(s1m), angular_momentum_vec(units)));
  t.h3_closed = (0.5 * g * g * hb * hb) * inv_r2_op();

  const Operator r_dot_p = dot(position_vec(), p);
  const Operator s1s2 = Operator::constant(dot(s1m, s2m));
  const Operator r_s1 =
      Operator::matrix([s1m](const Vec3& q) { return dot(q, s1m); });
  t.h4_expanded = (I * (0.5 * g * hb)) *
                  (inv_r2_op() * (r_dot_p * s1s2 + l_dot_s1_cross_s2(units) -
                                  r_s1 * dot(s2, p)));

  const Operator rr = Operator::matrix(rs1_rs2_over_r4);
  t.h5_closed = -t.h4 - (hb * hb * g) * rr;
  t.h6_closed = (-0.5 * hb * hb * g * g) * rr;
  t.cross_term = -t.h4 - t.h5 + t.h6;
  t.cross_term_closed = (-0.5 * hb * hb * g * (g - 2.0)) * rr;
  return t;
}

Operator l_dot_s1_cross_s2(const UnitConventions& units) {
  return dot(angular_momentum_vec(units),
             constant_vec(cross(sigma_source(), sigma_particle())));
}

Operator l_dot_s1_cross_s2_expanded(const UnitConventions& units) {
  const MatVec3 s1m = sigma_source();
  const MatVec3 s2m = sigma_particle();
  const OpVec3 p = momentum_vec(units);
  const Operator r_s1 =
      Operator::matrix([s1m](const Vec3& q) { return dot(q, s1m); });
  const Operator r_s2 =
      Operator::matrix([s2m](const Vec3& q) { return dot(q, s2m); });
  return r_s1 * dot(constant_vec(s2m), p) - r_s2 * dot(constant_vec(s1m), p);
}

const char* to_string(InteractionLabel label) {
  switch (label) {
    case InteractionLabel::kSpinSpinExchange: return "spin_spin_exchange";
    case InteractionLabel::kSpinOrbital: return "spin_orbital";
    case InteractionLabel::kDmType: return "dm_type";
    case InteractionLabel::kDipoleDipole: return "dipole_dipole";
    case InteractionLabel::kGeneralizedSpinOrbital:
      return "generalized_spin_orbital";
    case InteractionLabel::kTensorForce: return "tensor_force";
  }
  return "unknown";
}

std::vector<InteractionTerm> interaction_catalogue(
    const UnitConventions& units) {
  const MatVec3 s1 = sigma_source();
  const MatVec3 s2 = sigma_particle();
  const SpinMatrix s1s2 = dot(s1, s2);
  const MatVec3 s1xs2 = cross(s1, s2);

  const MatrixFn exchange = [s1s2](const Vec3&) { return s1s2; };
  const MatrixFn dm = [s1xs2](const Vec3& q) { return dot(q, s1xs2); };
  const MatrixFn dipole = [s1, s2](const Vec3& q) {
    return (1.0 / r2_of(q)) * (dot(q, s1) * dot(q, s2));
  };
  const MatrixFn tensor_force = [s1, s2, s1s2](const Vec3& q) {
    return (3.0 / r2_of(q)) * (dot(q, s1) * dot(q, s2)) - s1s2;
  };

  std::vector<InteractionTerm> out;
  out.push_back({InteractionLabel::kSpinSpinExchange,
                 Operator::matrix(exchange), exchange});
  out.push_back({InteractionLabel::kSpinOrbital,
                 dot(constant_vec(s1), angular_momentum_vec(units)), {}});
  out.push_back({InteractionLabel::kDmType, Operator::matrix(dm), dm});
  out.push_back({InteractionLabel::kDipoleDipole, Operator::matrix(dipole),
                 dipole});
  out.push_back({InteractionLabel::kGeneralizedSpinOrbital,
                 l_dot_s1_cross_s2(units), {}});
  out.push_back({InteractionLabel::kTensorForce, Operator::matrix(tensor_force),
                 tensor_force});
  return out;
}

HeisenbergReport heisenberg_checks(double g,
                                   const std::vector<SpinorField>& fields,
                                   const std::vector<Vec3>& points,
                                   const FDScheme& scheme,
                                   const UnitConventions& units) {
  const double hb = units.hbar;
  const MatVec3 spin = spin_half(units);
  const OpVec3 pi = canonical_momentum(g, units);
  const Operator pi2 = dot(pi, pi);
  const Operator hs = (0.5 / units.mass) * pi2;
  const OpVec3 r = position_vec();
  const OpVec3 B = matrix_vec([g, spin](const Vec3& q) {
    const double r2 = r2_of(q);
    const SpinMatrix rs = dot(q, spin);
    return MatVec3{(g * (g - 2.0) * q.x / (r2 * r2)) * rs,
                   (g * (g - 2.0) * q.y / (r2 * r2)) * rs,
                   (g * (g - 2.0) * q.z / (r2 * r2)) * rs};
  });
  const cplx I(0.0, 1.0);
  const OpVec3 force_rhs = (I * hb) * (cross(pi, B) - cross(B, pi));

  HeisenbergReport rep;
  for (const SpinorField& f : fields) {
    for (const Vec3& q : points) {
      std::array<Column, 3> vel_l, vel_r, force_l;
      for (int i = 0; i < 3; ++i) {
        vel_l[i] = (1.0 / (I * hb)) * commutator_apply(r[i], hs, f, q, scheme);
        vel_r[i] = (1.0 / units.mass) * op_apply(pi[i], f, q, scheme);
        force_l[i] = commutator_apply(pi[i], pi2, f, q, scheme);
      }
      const std::array<Column, 3> force_r = op_apply(force_rhs, f, q, scheme);
      const double fn = f(q).norm();
      rep.velocity = std::max(rep.velocity, relative_residual(vel_l, vel_r));
      // At g = 2 the right side vanishes, so scale by the field instead.
      rep.force = std::max(rep.force, scaled_residual(force_l, force_r, fn));
      ++rep.samples;
    }
  }
  return rep;
}

}  // namespace spinab
