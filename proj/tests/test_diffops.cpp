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

#include <gtest/gtest.h>

#include "spinab/diffops.hpp"
#include "spinab/errors.hpp"

using namespace spinab;

namespace {

const cplx I(0.0, 1.0);

SpinorField plane_wave(const Vec3& k, int dim = 1) {
  return {dim, [k, dim](const Vec3& q) {
            Column c(dim);
            for (int i = 0; i < dim; ++i) c[i] = std::polar(1.0 + i, dot(k, q));
            return c;
          }};
}

std::vector<SpinorField> random_fields(std::uint64_t seed, int n, int dim) {
  Rng rng(seed);
  std::vector<SpinorField> out;
  for (const GaussianWave& w : make_gaussian_waves(rng, n, dim, {0.5, 0.5, 0.5})) {
    out.push_back(gaussian_wave_field(w));
  }
  return out;
}

TEST(Rng, SequenceIsStandardAndSeeded) {
  // The 10000th output of a default-seeded mt19937_64 is fixed by the standard.
  std::mt19937_64 ref;
  ref.discard(9999);
  EXPECT_EQ(ref(), 9981545732273789042ull);
  Rng a(11), b(11), c(12);
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  EXPECT_NE(Rng(11).uniform(), c.uniform());
}

TEST(FDScheme, Validation) {
  EXPECT_THROW((FDScheme{0.0, 1e-3, 4}.validate()), Error);
  EXPECT_THROW((FDScheme{1e-4, 1e-3, 3}.validate()), Error);
}

TEST(Momentum, PlaneWaveEigenvalue) {
  const UnitConventions u{0.8, 1.0, 1.0, 1.0};
  const Vec3 k{0.3, -1.1, 0.7};
  const SpinorField f = plane_wave(k, 2);
  const Vec3 q{0.4, 0.2, -0.9};
  const auto p = op_apply(momentum_vec(u), f, q);
  for (int a = 0; a < 3; ++a) {
    EXPECT_LT(relative_residual(p[a], (u.hbar * k[a]) * f(q)), 1e-10);
  }
}

TEST(Operator, DepthCounting) {
  const Operator p = Operator::momentum(0);
  EXPECT_EQ(Operator::position(1).depth(), 0);
  EXPECT_EQ(p.depth(), 1);
  EXPECT_EQ((p * p).depth(), 2);
  EXPECT_EQ((p + p * p * p).depth(), 3);
}

TEST(Operator, CanonicalCommutator) {
  // [x_a, p_b] = i hbar delta_ab on random fields.
  const auto fields = random_fields(3, 3, 2);
  const OpVec3 r = position_vec(), p = momentum_vec();
  for (const SpinorField& f : fields) {
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        const Vec3 q{0.3, 0.8, -0.2};
        const Column lhs = commutator_apply(r[a], p[b], f, q);
        const Column rhs = (a == b ? I : cplx(0.0)) * f(q);
        EXPECT_LT(scaled_residual(lhs, rhs, f(q).norm()), 1e-9);
      }
    }
  }
}

TEST(Operator, AngularMomentumAlgebra) {
  const auto fields = random_fields(9, 3, 1);
  const OpVec3 l = angular_momentum_vec();
  Rng rng(4);
  for (const Vec3& q : sample_points(rng, 4)) {
    for (const SpinorField& f : fields) {
      const auto lhs = op_apply(cross(l, l), f, q);
      const auto rhs = op_apply(I * l, f, q);
      EXPECT_LT(relative_residual(lhs, rhs), 1e-7);
    }
  }
}

TEST(Operator, NonFiniteOutputIsDomainError) {
  const Operator bad = Operator::multiply([](const Vec3& q) -> cplx { return 1.0 / q.x; });
  const SpinorField f = plane_wave({1, 0, 0});
  try {
    op_apply(bad, f, {0.0, 1.0, 1.0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDomain);
  }
}

TEST(FDCurl, CurlOfKnownField) {
  // curl(-yz, xz, 0) = (-x, -y, 2z)
  const auto f = [](const Vec3& q) { return Vec3{-q.y * q.z, q.x * q.z, 0.0}; };
  const Vec3 q{0.7, -0.3, 1.1};
  const Vec3 c = fd_curl(f, q, 1e-3);
  EXPECT_NEAR(c.x, -q.x, 1e-10);
  EXPECT_NEAR(c.y, -q.y, 1e-10);
  EXPECT_NEAR(c.z, 2 * q.z, 1e-10);
}

TEST(SamplePoints, StayInsideTheBox) {
  Rng rng(21);
  const PointSampling s;
  for (const Vec3& q : sample_points(rng, 500, s)) {
    const SphericalPoint sp = to_spherical(q);
    EXPECT_GE(sp.r, s.r_lo - 1e-12);
    EXPECT_LE(sp.r, s.r_hi + 1e-12);
    EXPECT_GE(std::sin(sp.theta), s.min_sin_theta - 1e-12);
    EXPECT_LE(std::fabs(sp.phi), kPi - s.phi_margin + 1e-12);
  }
}

TEST(Residuals, Definitions) {
  const Column a(2, {1.0, 0.0}), b(2, {0.0, 0.0});
  EXPECT_DOUBLE_EQ(relative_residual(a, b), 1e8);
  EXPECT_DOUBLE_EQ(scaled_residual(a, b, 4.0), 0.25);
}

}  // namespace
