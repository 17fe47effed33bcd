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

#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "spinab/dirac.hpp"

using namespace spinab;

namespace {

const cplx I(0.0, 1.0);

SpinMatrix pauli(int i) {
  switch (i) {
    case 0: return SpinMatrix(2, {0.0, 1.0, 1.0, 0.0});
    case 1: return SpinMatrix(2, {0.0, -I, I, 0.0});
    case 2: return SpinMatrix(2, {1.0, 0.0, 0.0, -1.0});
  }
  return SpinMatrix::identity(2);
}

// Explicit Kronecker products, independent of the library helpers.
SpinMatrix kron3(const SpinMatrix& a, const SpinMatrix& b, const SpinMatrix& c) {
  SpinMatrix out(8);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      out(i, j) = a(i / 4, j / 4) * b((i / 2) % 2, (j / 2) % 2) * c(i % 2, j % 2);
    }
  }
  return out;
}

std::vector<SpinorField> fields(std::uint64_t seed, int n, int dim) {
  Rng rng(seed);
  std::vector<SpinorField> out;
  for (const GaussianWave& w : make_gaussian_waves(rng, n, dim, {0.7, 0.5, 0.6})) {
    out.push_back(gaussian_wave_field(w));
  }
  return out;
}

std::vector<Vec3> points(std::uint64_t seed, int n) {
  Rng rng(seed);
  return sample_points(rng, n);
}

TEST(DiracMatrices, Layout) {
  const SpinMatrix one = SpinMatrix::identity(2);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(max_abs_diff(sigma_source()[i], kron3(one, one, pauli(i))), 0.0);
    EXPECT_EQ(max_abs_diff(sigma_particle()[i], kron3(one, pauli(i), one)), 0.0);
    EXPECT_EQ(max_abs_diff(alpha8()[i], kron3(pauli(0), pauli(i), one)), 0.0);
  }
  EXPECT_EQ(max_abs_diff(beta8(), kron3(pauli(2), one, one)), 0.0);
}

TEST(DiracMatrices, Clifford) {
  const MatVec3 a = alpha8();
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(anticommutator(a[i], beta8()).max_abs(), 0.0);
    for (int j = 0; j < 3; ++j) {
      const SpinMatrix expect = SpinMatrix::scalar(8, i == j ? 2.0 : 0.0);
      EXPECT_EQ(max_abs_diff(anticommutator(a[i], a[j]), expect), 0.0);
      EXPECT_EQ(commutator(sigma_source()[i], sigma_particle()[j]).max_abs(), 0.0);
      EXPECT_EQ(commutator(sigma_source()[i], a[j]).max_abs(), 0.0);
    }
  }
}

TEST(SourcePotential, TransverseAndScaled) {
  const Vec3 q{0.4, -0.9, 1.2};
  const double r2 = dot(q, q);
  for (double g : {1.0, 2.5}) {
    const MatVec3 A = source_potential(g, q);
    // r . A = 0 and A = g r x sigma_1 / (2 r^2).
    EXPECT_LT(dot(q, A).max_abs(), 1e-15);
    const MatVec3 ref = (g / (2.0 * r2)) * cross(q, sigma_source());
    EXPECT_LT(max_abs_diff(A, ref), 1e-15);
  }
}

TEST(DmContraction, OddInPositionAndMatchesAlphaA) {
  for (const Vec3& q : points(11, 5)) {
    const SpinMatrix d = dm_contraction(2.0, q);
    EXPECT_LT(max_abs_diff(dm_contraction(2.0, -1.0 * q), -d), 1e-15);
    EXPECT_LT(max_abs_diff(d, -dot(alpha8(), source_potential(2.0, q))), 1e-14);
    EXPECT_LT(max_abs_diff(d, d.adjoint()), 1e-15);
  }
}

TEST(DiracSquare, IdentityHolds) {
  const auto f = fields(12, 3, 8);
  const auto p = points(13, 4);
  for (double g : {0.0, 1.0, 2.0}) {
    const ResidualReport r = dirac_square_check(g, 0.7, f, p);
    EXPECT_EQ(r.samples, 12);
    EXPECT_LT(r.max_residual, 2e-3) << g;
  }
}

TEST(Interaction, TermsMatchClosedForms) {
  const auto f = fields(14, 2, 8);
  const auto p = points(15, 3);
  const InteractionTerms t = interaction_terms(1.5);
  auto resid = [&](const Operator& a, const Operator& b) {
    double worst = 0.0;
    for (const SpinorField& fi : f) {
      for (const Vec3& q : p) {
        worst = std::max(worst, scaled_residual(op_apply(a, fi, q), op_apply(b, fi, q),
                                                fi(q).norm()));
      }
    }
    return worst;
  };
  EXPECT_LT(resid(t.h1, t.h1_closed), 1e-4);
  EXPECT_LT(resid(t.h2, t.h1), 1e-4);
  EXPECT_LT(resid(t.h3, t.h3_closed), 1e-12);
  EXPECT_LT(resid(t.h4, t.h4_expanded), 1e-3);
  EXPECT_LT(resid(t.h5, t.h5_closed), 1e-3);
  EXPECT_LT(resid(t.h6, t.h6_closed), 1e-12);
  EXPECT_LT(resid(t.cross_term, t.cross_term_closed), 1e-3);
  EXPECT_LT(resid(l_dot_s1_cross_s2(), l_dot_s1_cross_s2_expanded()), 1e-3);
}

TEST(Interaction, CrossTermVanishesAtGTwo) {
  const auto f = fields(16, 2, 8);
  const InteractionTerms t = interaction_terms(2.0);
  for (const Vec3& q : points(17, 3)) {
    for (const SpinorField& fi : f) {
      EXPECT_LT(op_apply(t.cross_term_closed, fi, q).norm(), 1e-14);
      EXPECT_LT(op_apply(t.cross_term, fi, q).norm() / fi(q).norm(), 1e-3);
    }
  }
}

TEST(Catalogue, LabelsAndTensorOnAxis) {
  const auto cat = interaction_catalogue();
  ASSERT_EQ(cat.size(), 6u);
  std::set<std::string> names;
  for (const InteractionTerm& t : cat) names.insert(to_string(t.label));
  EXPECT_EQ(names.size(), 6u);
  for (const InteractionTerm& t : cat) {
    if (t.label != InteractionLabel::kTensorForce) continue;
    ASSERT_TRUE(static_cast<bool>(t.matrix));
    SpinMatrix ref = 3.0 * (sigma_source().z() * sigma_particle().z());
    for (int i = 0; i < 3; ++i) ref -= sigma_source()[i] * sigma_particle()[i];
    EXPECT_LT(max_abs_diff(t.matrix({0.0, 0.0, 2.0}), ref), 1e-14);
    EXPECT_LT(std::abs(t.matrix({0.3, -0.2, 0.7}).trace()), 1e-14);
  }
}

TEST(Heisenberg, VelocityAndForce) {
  const auto f = fields(18, 2, 2);
  const auto p = points(19, 3);
  for (double g : {0.0, 2.0, 3.0}) {
    const HeisenbergReport r = heisenberg_checks(g, f, p);
    EXPECT_EQ(r.samples, 6);
    EXPECT_LT(r.velocity, 5e-3) << g;
    EXPECT_LT(r.force, 5e-3) << g;
  }
}

}  // namespace
