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
#include <complex>
#include <initializer_list>

#include "spinab/geometry.hpp"

namespace spinab {

using cplx = std::complex<double>;

inline constexpr int kMaxDim = 8;

// Dense row-major complex matrix of dimension 1..8. Value semantics; the
// storage is inline so no allocation happens in finite-difference loops.
class SpinMatrix {
 public:
  SpinMatrix() : SpinMatrix(2) {}
  explicit SpinMatrix(int dim);
  SpinMatrix(int dim, std::initializer_list<cplx> row_major);

  static SpinMatrix identity(int dim);
  static SpinMatrix scalar(int dim, cplx s);

  int dim() const { return dim_; }
  cplx& operator()(int r, int c) { return a_[r * kMaxDim + c]; }
  const cplx& operator()(int r, int c) const { return a_[r * kMaxDim + c]; }

  SpinMatrix adjoint() const;
  cplx trace() const;
  double max_abs() const;

  SpinMatrix& operator+=(const SpinMatrix& o);
  SpinMatrix& operator-=(const SpinMatrix& o);
  SpinMatrix& operator*=(cplx s);

 private:
  int dim_;
  std::array<cplx, kMaxDim * kMaxDim> a_{};
};

SpinMatrix operator+(SpinMatrix a, const SpinMatrix& b);
SpinMatrix operator-(SpinMatrix a, const SpinMatrix& b);
SpinMatrix operator-(SpinMatrix a);
SpinMatrix operator*(const SpinMatrix& a, const SpinMatrix& b);
SpinMatrix operator*(cplx s, SpinMatrix a);
SpinMatrix operator*(SpinMatrix a, cplx s);
inline SpinMatrix operator*(double s, const SpinMatrix& a) {
  return cplx(s, 0.0) * a;
}

double max_abs_diff(const SpinMatrix& a, const SpinMatrix& b);

SpinMatrix commutator(const SpinMatrix& a, const SpinMatrix& b);
SpinMatrix anticommutator(const SpinMatrix& a, const SpinMatrix& b);
// Kronecker product; entry (i*nb + k, j*nb + l) = a(i,j) b(k,l).
SpinMatrix tensor(const SpinMatrix& a, const SpinMatrix& b);

// Spinor column with inline storage.
class Column {
 public:
  Column() : Column(1) {}
  explicit Column(int dim);
  Column(int dim, std::initializer_list<cplx> values);

  int dim() const { return dim_; }
  cplx& operator[](int i) { return v_[i]; }
  const cplx& operator[](int i) const { return v_[i]; }
  double norm() const;

  Column& operator+=(const Column& o);
  Column& operator-=(const Column& o);
  Column& operator*=(cplx s);

 private:
  int dim_;
  std::array<cplx, kMaxDim> v_{};
};

Column operator+(Column a, const Column& b);
Column operator-(Column a, const Column& b);
Column operator*(cplx s, Column a);
inline Column operator*(double s, const Column& a) { return cplx(s, 0.0) * a; }
Column operator*(const SpinMatrix& m, const Column& v);
cplx inner(const Column& a, const Column& b);  // a^dagger b

// Three SpinMatrix components of one dimension.
struct MatVec3 {
  std::array<SpinMatrix, 3> c;

  MatVec3() = default;
  MatVec3(SpinMatrix x, SpinMatrix y, SpinMatrix z) : c{x, y, z} {}
  static MatVec3 zero(int dim);
  // v_i times the identity.
  static MatVec3 from_vec(const Vec3& v, int dim);

  int dim() const { return c[0].dim(); }
  SpinMatrix& operator[](int i) { return c[i]; }
  const SpinMatrix& operator[](int i) const { return c[i]; }
  const SpinMatrix& x() const { return c[0]; }
  const SpinMatrix& y() const { return c[1]; }
  const SpinMatrix& z() const { return c[2]; }
  double max_abs() const;
};

MatVec3 operator+(const MatVec3& a, const MatVec3& b);
MatVec3 operator-(const MatVec3& a, const MatVec3& b);
MatVec3 operator*(cplx s, const MatVec3& a);
inline MatVec3 operator*(double s, const MatVec3& a) {
  return cplx(s, 0.0) * a;
}
MatVec3 operator*(const SpinMatrix& m, const MatVec3& a);
MatVec3 operator*(const MatVec3& a, const SpinMatrix& m);
double max_abs_diff(const MatVec3& a, const MatVec3& b);

// Operator-valued products keep the left factor on the left in every term.
SpinMatrix dot(const MatVec3& a, const MatVec3& b);
MatVec3 cross(const MatVec3& a, const MatVec3& b);
SpinMatrix dot(const Vec3& a, const MatVec3& b);
MatVec3 cross(const Vec3& a, const MatVec3& b);
MatVec3 cross(const MatVec3& a, const Vec3& b);
MatVec3 tensor(const MatVec3& a, const SpinMatrix& b);
MatVec3 tensor(const SpinMatrix& a, const MatVec3& b);

struct UnitConventions {
  double hbar = 1.0;
  double mass = 1.0;
  double charge_e = 1.0;
  double light_c = 1.0;

  void validate() const;
  double planck_h() const;
};

MatVec3 pauli();
MatVec3 spin_half(const UnitConventions& units = {});
MatVec3 spin_one(const UnitConventions& units = {});

// alpha = sigma_x (x) sigma, beta = sigma_z (x) 1 (4x4).
MatVec3 dirac_alpha();
SpinMatrix dirac_beta();

}  // namespace spinab
