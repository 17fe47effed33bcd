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

#include "spinab/errors.hpp"
#include "spinab/interference.hpp"
#include "spinab/spectra.hpp"

using namespace spinab;

namespace {

const cplx I(0.0, 1.0);

double cdiff(const CVec3& a, const CVec3& b) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Direct two-path amplitude sum, used as the oracle for p_spin.
double p_spin_direct(double d, const InterferenceParams& q) {
  const double ratio = double(q.m + 1) / q.m;
  const cplx a1 = q.c1 * std::exp(q.mu1) * (1.0 + std::exp(q.mu2 + I * d));
  const cplx a2 = q.c2 * std::exp(q.mu3) * (1.0 + std::exp(q.mu4 + I * ratio * d));
  return q.N * q.N * (std::norm(a1) + std::norm(a2));
}

TEST(FVector, PlaneWave) {
  const Vec3 k{0.4, -1.1, 0.7};
  const ComplexFn psi = [&](const Vec3& q) { return std::exp(I * dot(k, q)); };
  const CVec3 f = f_vector(psi, {0.3, 0.8, -0.2});
  EXPECT_LT(cdiff(f, {I * k.x, I * k.y, I * k.z}), 1e-8);
}

TEST(FVector, MagneticPhaseAddsAzimuthalTerm) {
  const Vec3 k{0.5, 0.2, -0.3};
  const double fr = 0.37;
  const ComplexFn psi = [&](const Vec3& q) { return psi_magnetic_phase(fr, k, q); };
  for (const Vec3& q : {Vec3{1.0, 0.5, 0.2}, Vec3{-0.4, 1.3, -0.7}}) {
    const double rho2 = q.x * q.x + q.y * q.y;
    const CVec3 expect{I * k.x + I * fr * q.y / rho2, I * k.y - I * fr * q.x / rho2,
                       I * k.z};
    EXPECT_LT(cdiff(f_vector(psi, q), expect), 1e-8);
  }
}

TEST(FVector, NodeIsAnError) {
  const ComplexFn psi = [](const Vec3& q) { return cplx(q.x); };
  EXPECT_THROW(f_vector(psi, {0.0, 1.0, 0.0}), Error);
}

TEST(FVector, ClosedFormMatchesDifferences) {
  for (const ChiSpec c : {ChiSpec{2.5, 1.7, 3, 1}, ChiSpec{1.5, 0.6, 2, -1}}) {
    const ComplexFn psi = [&](const Vec3& q) { return chi_value(c, q); };
    for (const Vec3& q : {Vec3{0.7, 0.3, 0.4}, Vec3{-0.2, 0.9, -0.5}}) {
      const CVec3 a = f_vector(psi, q), b = f_vector_closed(c, q);
      double scale = 0.0;
      for (const cplx& z : b) scale = std::max(scale, std::abs(z));
      EXPECT_LT(cdiff(a, b), 1e-6 * scale);
    }
  }
}

TEST(LoopIntegral, ConstantFieldVanishes) {
  const CVecField F = [](const Vec3&) { return CVec3{I * 0.3, I * -1.2, I * 0.8}; };
  // Integrand magnitude is about |k| times the circumference, near 12.
  EXPECT_LT(std::abs(loop_integral(F, PathSpec::circle({0.2, -0.1, 0.4}, 1.3))), 1e-10);
}

TEST(LoopIntegral, AharonovBohmPhase) {
  const double fr = 0.37;
  const CVecField F = [&](const Vec3& q) {
    const double rho2 = q.x * q.x + q.y * q.y;
    return CVec3{I * fr * q.y / rho2, -I * fr * q.x / rho2, 0.0};
  };
  for (double radius : {0.75, 1.0, 3.0}) {
    const cplx v = loop_integral(F, PathSpec::circle({0, 0, 0}, radius));
    EXPECT_LT(std::abs(v - (-I * 2.0 * kPi * fr)), 1e-10) << radius;
  }
  // Not enclosing the line gives nothing.
  EXPECT_LT(std::abs(loop_integral(F, PathSpec::circle({3, 0, 0}, 1.0))), 1e-10);
}

TEST(LoopIntegral, LatitudeWinding) {
  for (int m : {1, -2, 3}) {
    const ChiSpec c{2.5, 1.2, 4, m};
    const ComplexFn psi = [&](const Vec3& q) { return chi_value(c, q); };
    const CVecField F = [&](const Vec3& q) { return f_vector(psi, q); };
    const cplx v = loop_integral(F, PathSpec::latitude(1.1, 0.8, 256));
    EXPECT_LT(std::abs(v.imag() - 2.0 * kPi * m), 1e-6);
    EXPECT_LT(std::abs(v.real()), 1e-6);
  }
}

TEST(LoopIntegral, PathValidation) {
  PathSpec p = PathSpec::circle({0, 0, 0}, 1.0, 32);
  EXPECT_THROW(p.validate(), Error);
  PathSpec open = PathSpec::segment({0, 0, 0}, {1, 0, 0});
  open.kind = PathKind::kClosedLoop;
  EXPECT_THROW(open.validate(), Error);
}

TEST(LoopIntegral, SegmentOfGradient) {
  // Integral of grad(x^2 y) along a leg is the endpoint difference.
  const CVecField F = [](const Vec3& q) {
    return CVec3{2.0 * q.x * q.y, q.x * q.x, 0.0};
  };
  const Vec3 a{0.1, 0.2, 0.0}, b{1.3, -0.7, 0.5};
  const cplx v = loop_integral(F, PathSpec::segment(a, b, 512));
  EXPECT_NEAR(v.real(), b.x * b.x * b.y - a.x * a.x * a.y, 1e-5);
}

TEST(Ordinary, NamedValues) {
  EXPECT_DOUBLE_EQ(p_ordinary(0.0, 0.5), 1.0);
  EXPECT_NEAR(p_ordinary(kPi, 0.5), 0.0, 1e-16);
  EXPECT_NEAR(p_ordinary(3.0 * kPi / 5.0, 0.5), 0.3455, 1e-4);
}

TEST(Magnetic, FluxShiftsTheCurve) {
  for (double d = 0.0; d < 4 * kPi; d += 0.37) {
    EXPECT_DOUBLE_EQ(p_magnetic(d, 0.0, 0.5), p_ordinary(d, 0.5));
    EXPECT_NEAR(p_magnetic(d, 2.0, 0.5), p_ordinary(d, 0.5), 1e-12);
    EXPECT_NEAR(p_magnetic(d, 0.25, 0.5), p_ordinary(d - kPi / 2.0, 0.5), 1e-12);
  }
  EXPECT_NEAR(flux_from_delta2(delta2_from_flux(0.37)), 0.37, 1e-15);
}

TEST(Spin, MatchesDirectSum) {
  const InterferenceParams q = InterferenceParams::figure(1, 2, 3, 4, 20, 5, false);
  EXPECT_NEAR(p_spin(0.0, q), p_spin_direct(0.0, q), 1e-12 * p_spin_direct(0.0, q));
  for (int m : {-3, -1, 1, 2, 7}) {
    const InterferenceParams r =
        InterferenceParams::figure(-0.3, 0.4, 0.2, -0.8, 6, m, true);
    for (double d = -5.0; d < 5.0; d += 0.23) {
      EXPECT_NEAR(p_spin(d, r), p_spin_direct(d, r), 1e-12);
      EXPECT_NEAR(p_spin(d, r), p_spin(-d, r), 1e-12);
    }
  }
}

TEST(Spin, ParamErrors) {
  EXPECT_THROW(InterferenceParams::figure(0, 0, 0, 0, 2, 0, true).validate(), Error);
  EXPECT_THROW(p_spin(0.0, InterferenceParams::figure(0, 0, 0, 0, 2, 0, true)), Error);
  EXPECT_THROW(InterferenceParams::figure(0, 0, 0, 0, 1, -2, true), Error);
  EXPECT_THROW(normalized_N(0.0, 0.0), Error);
  EXPECT_NEAR(normalized_N(1.0, 1.0), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Spin, NoSecondComponentIsOrdinaryWithVisibility) {
  InterferenceParams q = InterferenceParams::figure(0.2, 0.9, 0.0, 0.0, 3, 1, false);
  q.c2 = 0.0;
  for (double d = 0.0; d < 6.0; d += 0.5) {
    EXPECT_NEAR(p_spin(d, q), p_ordinary_visibility(d, 0.9, 1.0, 0.2), 1e-12);
  }
}

TEST(Visibility, Values) {
  EXPECT_DOUBLE_EQ(visibility(0.0), 1.0);
  EXPECT_NEAR(visibility(2.0), 0.2658, 1e-4);
  for (double mu : {0.1, 0.7, 3.0}) EXPECT_DOUBLE_EQ(visibility(mu), visibility(-mu));
  // mu = 0 reduces to the ordinary curve.
  EXPECT_NEAR(p_ordinary_visibility(1.1, 0.0, 0.5), p_ordinary(1.1, 0.5), 1e-15);
}

TEST(Curve, GridAndKinds) {
  CurveParams p;
  const auto rows = curve(CurveKind::kOrdinary, p, {0.0, 4 * kPi, 1025});
  ASSERT_EQ(rows.size(), 1025u);
  EXPECT_EQ(rows.front().delta, 0.0);
  EXPECT_EQ(rows.back().delta, 4 * kPi);
  EXPECT_NEAR(rows[256].value, 0.0, 1e-15);  // delta = pi
  EXPECT_NEAR(rows[768].value, 0.0, 1e-15);  // delta = 3 pi
  EXPECT_THROW(curve(CurveKind::kOrdinary, p, {0.0, 1.0, 1}), Error);
  EXPECT_EQ(parse_curve_kind(to_string(CurveKind::kSpin)), CurveKind::kSpin);
  EXPECT_THROW(parse_curve_kind("quantum"), Error);
}

TEST(Curve, PearsonCorrelation) {
  CurveParams p;
  const auto a = curve(CurveKind::kOrdinary, p, {0.0, 4 * kPi, 400});
  p.delta2 = kPi;
  const auto b = curve(CurveKind::kMagnetic, p, {0.0, 4 * kPi, 400});
  EXPECT_NEAR(pearson_correlation(a, a), 1.0, 1e-12);
  EXPECT_NEAR(pearson_correlation(a, b), -1.0, 1e-12);
}

}  // namespace
