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

#include <gtest/gtest.h>

#include "spinab/errors.hpp"
#include "spinab/qalgebra.hpp"

using namespace spinab;

namespace {

const cplx I(0.0, 1.0);

TEST(Pauli, SquaresAreIdentityAndProductsCycle) {
  const MatVec3 s = pauli();
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(max_abs_diff(s[i] * s[i], SpinMatrix::identity(2)), 0.0);
    EXPECT_EQ(std::abs(s[i].trace()), 0.0);
    EXPECT_EQ(max_abs_diff(s[i].adjoint(), s[i]), 0.0);
  }
  EXPECT_EQ(max_abs_diff(s.x() * s.y(), I * s.z()), 0.0);
  EXPECT_EQ(max_abs_diff(s.y() * s.z(), I * s.x()), 0.0);
  EXPECT_EQ(max_abs_diff(s.z() * s.x(), I * s.y()), 0.0);
}

TEST(SpinOperators, CommutationAndCasimir) {
  const UnitConventions u{0.7, 1.0, 1.0, 1.0};
  for (const MatVec3& S : {spin_half(u), spin_one(u)}) {
    EXPECT_LT(max_abs_diff(cross(S, S), (I * u.hbar) * S), 1e-15);
    const double s = S.dim() == 2 ? 0.5 : 1.0;
    EXPECT_LT(max_abs_diff(dot(S, S),
                           SpinMatrix::scalar(S.dim(), u.hbar * u.hbar * s * (s + 1))),
              1e-15);
  }
}

TEST(SpinMatrix, TensorLayout) {
  const SpinMatrix a(2, {1.0, 2.0, 3.0, 4.0});
  const SpinMatrix b(2, {0.0, 1.0, 1.0, 0.0});
  const SpinMatrix t = tensor(a, b);
  ASSERT_EQ(t.dim(), 4);
  EXPECT_EQ(t(0, 1), cplx(1.0));
  EXPECT_EQ(t(1, 2), cplx(2.0));
  EXPECT_EQ(t(3, 2), cplx(4.0));
  EXPECT_EQ(t(2, 2), cplx(0.0));
}

TEST(SpinMatrix, ShapeErrors) {
  EXPECT_THROW(SpinMatrix(9), Error);
  EXPECT_THROW((SpinMatrix(2, {1.0, 2.0, 3.0})), Error);
  EXPECT_THROW(SpinMatrix(2) + SpinMatrix(3), Error);
  EXPECT_THROW(SpinMatrix(2) * Column(3), Error);
}

TEST(Dirac4, AnticommutationRelations) {
  const MatVec3 a = dirac_alpha();
  const SpinMatrix b = dirac_beta();
  EXPECT_EQ(max_abs_diff(b * b, SpinMatrix::identity(4)), 0.0);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(anticommutator(a[i], b).max_abs(), 0.0);
    for (int j = 0; j < 3; ++j) {
      EXPECT_EQ(max_abs_diff(anticommutator(a[i], a[j]),
                             SpinMatrix::scalar(4, i == j ? 2.0 : 0.0)),
                0.0);
    }
  }
}

TEST(MatVec3, CrossKeepsOperatorOrder) {
  // For commuting entries a x a = 0, for Pauli matrices it is 2i sigma.
  const MatVec3 s = pauli();
  EXPECT_LT(max_abs_diff(cross(s, s), (2.0 * I) * s), 1e-15);
  const MatVec3 v = MatVec3::from_vec({1.0, -2.0, 0.5}, 2);
  EXPECT_EQ(cross(v, v).max_abs(), 0.0);
}

TEST(UnitConventions, Validation) {
  EXPECT_THROW((UnitConventions{0.0, 1.0, 1.0, 1.0}.validate()), Error);
  EXPECT_NO_THROW(UnitConventions{}.validate());
}

}  // namespace
