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

#include "spinab/qalgebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinab/errors.hpp"

namespace spinab {
namespace {

void require_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    throw Error(ErrorKind::kShape,
                "dimension " + std::to_string(dim) + " outside 1..8");
  }
}

void require_same(int a, int b, const char* op) {
  if (a != b) {
    throw Error(ErrorKind::kShape, std::string(op) + ": dimension mismatch " +
                                       std::to_string(a) + " vs " +
                                       std::to_string(b));
  }
}

}  // namespace

SpinMatrix::SpinMatrix(int dim) : dim_(dim) { require_dim(dim); }

SpinMatrix::SpinMatrix(int dim, std::initializer_list<cplx> row_major)
    : SpinMatrix(dim) {
  if (static_cast<int>(row_major.size()) != dim * dim) {
    throw Error(ErrorKind::kShape, "SpinMatrix: wrong number of entries");
  }
  int k = 0;
  for (const cplx& v : row_major) {
    (*this)(k / dim, k % dim) = v;
    ++k;
  }
}

SpinMatrix SpinMatrix::identity(int dim) { return scalar(dim, 1.0); }

SpinMatrix SpinMatrix::scalar(int dim, cplx s) {
  SpinMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = s;
  return m;
}

SpinMatrix SpinMatrix::adjoint() const {
  SpinMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
  return m;
}

cplx SpinMatrix::trace() const {
  cplx t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double SpinMatrix::max_abs() const {
  double m = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m = std::max(m, std::abs((*this)(i, j)));
  return m;
}

SpinMatrix& SpinMatrix::operator+=(const SpinMatrix& o) {
  require_same(dim_, o.dim_, "SpinMatrix +");
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) (*this)(i, j) += o(i, j);
  return *this;
}

SpinMatrix& SpinMatrix::operator-=(const SpinMatrix& o) {
  require_same(dim_, o.dim_, "SpinMatrix -");
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) (*this)(i, j) -= o(i, j);
  return *this;
}

SpinMatrix& SpinMatrix::operator*=(cplx s) {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) (*this)(i, j) *= s;
  return *this;
}

SpinMatrix operator+(SpinMatrix a, const SpinMatrix& b) { return a += b; }
SpinMatrix operator-(SpinMatrix a, const SpinMatrix& b) { return a -= b; }
SpinMatrix operator-(SpinMatrix a) { return a *= -1.0; }
SpinMatrix operator*(cplx s, SpinMatrix a) { return a *= s; }
SpinMatrix operator*(SpinMatrix a, cplx s) { return a *= s; }

SpinMatrix operator*(const SpinMatrix& a, const SpinMatrix& b) {
  require_same(a.dim(), b.dim(), "SpinMatrix *");
  const int n = a.dim();
  SpinMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      for (int j = 0; j < n; ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

double max_abs_diff(const SpinMatrix& a, const SpinMatrix& b) {
  return (a - b).max_abs();
}

SpinMatrix commutator(const SpinMatrix& a, const SpinMatrix& b) {
  return a * b - b * a;
}

SpinMatrix anticommutator(const SpinMatrix& a, const SpinMatrix& b) {
  return a * b + b * a;
}

SpinMatrix tensor(const SpinMatrix& a, const SpinMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  SpinMatrix m(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j)
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) m(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
  return m;
}

Column::Column(int dim) : dim_(dim) { require_dim(dim); }

Column::Column(int dim, std::initializer_list<cplx> values) : Column(dim) {
  if (static_cast<int>(values.size()) != dim) {
    throw Error(ErrorKind::kShape, "Column: wrong number of entries");
  }
  int k = 0;
  for (const cplx& v : values) v_[k++] = v;
}

double Column::norm() const {
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) s += std::norm(v_[i]);
  return std::sqrt(s);
}

Column& Column::operator+=(const Column& o) {
  require_same(dim_, o.dim_, "Column +");
  for (int i = 0; i < dim_; ++i) v_[i] += o.v_[i];
  return *this;
}

Column& Column::operator-=(const Column& o) {
  require_same(dim_, o.dim_, "Column -");
  for (int i = 0; i < dim_; ++i) v_[i] -= o.v_[i];
  return *this;
}

Column& Column::operator*=(cplx s) {
  for (int i = 0; i < dim_; ++i) v_[i] *= s;
  return *this;
}

Column operator+(Column a, const Column& b) { return a += b; }
Column operator-(Column a, const Column& b) { return a -= b; }
Column operator*(cplx s, Column a) { return a *= s; }

Column operator*(const SpinMatrix& m, const Column& v) {
  require_same(m.dim(), v.dim(), "SpinMatrix * Column");
  Column out(v.dim());
  for (int i = 0; i < v.dim(); ++i) {
    cplx s = 0.0;
    for (int j = 0; j < v.dim(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

cplx inner(const Column& a, const Column& b) {
  require_same(a.dim(), b.dim(), "inner");
  cplx s = 0.0;
  for (int i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

MatVec3 MatVec3::zero(int dim) {
  return {SpinMatrix(dim), SpinMatrix(dim), SpinMatrix(dim)};
}

MatVec3 MatVec3::from_vec(const Vec3& v, int dim) {
  return {SpinMatrix::scalar(dim, v.x), SpinMatrix::scalar(dim, v.y),
          SpinMatrix::scalar(dim, v.z)};
}

double MatVec3::max_abs() const {
  return std::max({c[0].max_abs(), c[1].max_abs(), c[2].max_abs()});
}

MatVec3 operator+(const MatVec3& a, const MatVec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}
MatVec3 operator-(const MatVec3& a, const MatVec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
MatVec3 operator*(cplx s, const MatVec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}
MatVec3 operator*(const SpinMatrix& m, const MatVec3& a) {
  return {m * a[0], m * a[1], m * a[2]};
}
MatVec3 operator*(const MatVec3& a, const SpinMatrix& m) {
  return {a[0] * m, a[1] * m, a[2] * m};
}
double max_abs_diff(const MatVec3& a, const MatVec3& b) {
  return (a - b).max_abs();
}

SpinMatrix dot(const MatVec3& a, const MatVec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

MatVec3 cross(const MatVec3& a, const MatVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

SpinMatrix dot(const Vec3& a, const MatVec3& b) {
  return a.x * b[0] + a.y * b[1] + a.z * b[2];
}

MatVec3 cross(const Vec3& a, const MatVec3& b) {
  return {a.y * b[2] - a.z * b[1], a.z * b[0] - a.x * b[2],
          a.x * b[1] - a.y * b[0]};
}

MatVec3 cross(const MatVec3& a, const Vec3& b) {
  return {b.z * a[1] - b.y * a[2], b.x * a[2] - b.z * a[0],
          b.y * a[0] - b.x * a[1]};
}

MatVec3 tensor(const MatVec3& a, const SpinMatrix& b) {
  return {tensor(a[0], b), tensor(a[1], b), tensor(a[2], b)};
}

MatVec3 tensor(const SpinMatrix& a, const MatVec3& b) {
  return {tensor(a, b[0]), tensor(a, b[1]), tensor(a, b[2])};
}

void UnitConventions::validate() const {
  if (!(hbar > 0.0 && mass > 0.0 && charge_e > 0.0 && light_c > 0.0)) {
    throw Error(ErrorKind::kUsage, "UnitConventions: constants must be > 0");
  }
}

double UnitConventions::planck_h() const { return 2.0 * kPi * hbar; }

MatVec3 pauli() {
  const cplx i(0.0, 1.0);
  return {SpinMatrix(2, {0.0, 1.0, 1.0, 0.0}),
          SpinMatrix(2, {0.0, -i, i, 0.0}),
          SpinMatrix(2, {1.0, 0.0, 0.0, -1.0})};
}

MatVec3 spin_half(const UnitConventions& units) {
  units.validate();
  return (0.5 * units.hbar) * pauli();
}

MatVec3 spin_one(const UnitConventions& units) {
  units.validate();
  const cplx i(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0);
  MatVec3 m{SpinMatrix(3, {0.0, s, 0.0, s, 0.0, s, 0.0, s, 0.0}),
            SpinMatrix(3, {0.0, -i * s, 0.0, i * s, 0.0, -i * s, 0.0, i * s,
                           0.0}),
            SpinMatrix(3, {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -1.0})};
  return units.hbar * m;
}

MatVec3 dirac_alpha() { return tensor(pauli().x(), pauli()); }

SpinMatrix dirac_beta() {
  return tensor(pauli().z(), SpinMatrix::identity(2));
}

}  // namespace spinab
