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
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "spinab/geometry.hpp"
#include "spinab/qalgebra.hpp"

namespace spinab {

struct FDScheme {
  double h1 = 1e-4;  // single derivative applications
  double h2 = 1e-3;  // nested applications
  int order = 4;     // 2 or 4

  void validate() const;
};

struct SpinorField {
  int dim = 1;
  std::function<Column(const Vec3&)> eval;

  Column operator()(const Vec3& p) const { return eval(p); }
};

using ScalarFn = std::function<cplx(const Vec3&)>;
using MatrixFn = std::function<SpinMatrix(const Vec3&)>;
using MatVecFn = std::function<MatVec3(const Vec3&)>;

// Central difference of any value type supporting +, - and scalar *.
template <typename F>
auto central_diff(const F& f, const Vec3& p, int axis, double h, int order)
    -> decltype(f(p)) {
  Vec3 e;
  e[axis] = h;
  if (order == 2) {
    auto d = f(p + e) - f(p - e);
    return (0.5 / h) * d;
  }
  auto d1 = f(p + e) - f(p - e);
  auto d2 = f(p + 2.0 * e) - f(p - 2.0 * e);
  return (8.0 / (12.0 * h)) * d1 - (1.0 / (12.0 * h)) * d2;
}

// -i hbar grad f, one column per Cartesian axis. Uses h1.
std::array<Column, 3> momentum_apply(const SpinorField& f, const Vec3& p,
                                     const FDScheme& scheme,
                                     const UnitConventions& units = {});

MatVec3 fd_gradient(const MatrixFn& f, const Vec3& p, double h, int order = 4);
SpinMatrix fd_divergence(const MatVecFn& f, const Vec3& p, double h,
                         int order = 4);
MatVec3 fd_curl(const MatVecFn& f, const Vec3& p, double h, int order = 4);
Vec3 fd_curl(const std::function<Vec3(const Vec3&)>& f, const Vec3& p,
             double h, int order = 4);

// Linear operator expression acting on spinor fields. Composition a * b
// means "apply b first". Momentum nodes differentiate numerically; the
// step is chosen once per application from the expression's derivative
// depth (h1 for depth <= 1, h2 otherwise).
class Operator {
 public:
  struct Node;
  using FieldFn = std::function<Column(const Vec3&)>;

  Operator();  // identity
  static Operator identity();
  static Operator scalar(cplx s);
  static Operator multiply(ScalarFn f);
  static Operator matrix(MatrixFn m);
  static Operator constant(const SpinMatrix& m);
  static Operator position(int axis);
  static Operator momentum(int axis, const UnitConventions& units = {});

  int depth() const;
  Column eval(const FieldFn& f, const Vec3& p, double h, int order) const;

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(cplx s, const Operator& a);

 private:
  explicit Operator(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

inline Operator operator*(double s, const Operator& a) {
  return cplx(s, 0.0) * a;
}
Operator operator-(const Operator& a);

using OpVec3 = std::array<Operator, 3>;

OpVec3 position_vec();
OpVec3 momentum_vec(const UnitConventions& units = {});
// l = r x p
OpVec3 angular_momentum_vec(const UnitConventions& units = {});
OpVec3 constant_vec(const MatVec3& m);
// Component i multiplies by f(p)[i].
OpVec3 matrix_vec(const MatVecFn& f);

OpVec3 operator+(const OpVec3& a, const OpVec3& b);
OpVec3 operator-(const OpVec3& a, const OpVec3& b);
OpVec3 operator*(cplx s, const OpVec3& a);
OpVec3 operator*(const Operator& s, const OpVec3& a);
Operator dot(const OpVec3& a, const OpVec3& b);
OpVec3 cross(const OpVec3& a, const OpVec3& b);
Operator commutator(const Operator& a, const Operator& b);

Column op_apply(const Operator& op, const SpinorField& f, const Vec3& p,
                const FDScheme& scheme = {});
std::array<Column, 3> op_apply(const OpVec3& op, const SpinorField& f,
                               const Vec3& p, const FDScheme& scheme = {});
Column commutator_apply(const Operator& a, const Operator& b,
                        const SpinorField& f, const Vec3& p,
                        const FDScheme& scheme = {});

// ||lhs - rhs|| / max(||rhs||, 1e-8)
double relative_residual(const Column& lhs, const Column& rhs);
double relative_residual(const std::array<Column, 3>& lhs,
                         const std::array<Column, 3>& rhs);
// ||lhs - rhs|| / max(scale, 1e-8) for identities whose right side vanishes.
double scaled_residual(const Column& lhs, const Column& rhs, double scale);
double scaled_residual(const std::array<Column, 3>& lhs,
                       const std::array<Column, 3>& rhs, double scale);

// Deterministic generator: std::mt19937_64 output is fixed by the standard,
// and the conversion to double is done here rather than through a
// distribution object, whose algorithm is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

struct GaussianWave {
  Vec3 k;
  Vec3 center;
  double width = 1.0;
  Column spinor;
};

// e^{i k.r - |r - center|^2 / width^2} times a constant spinor.
SpinorField gaussian_wave_field(const GaussianWave& w);

// Random Gaussian-enveloped plane waves centred near `near`.
std::vector<GaussianWave> make_gaussian_waves(Rng& rng, int count, int dim,
                                              const Vec3& near);

struct PointSampling {
  double r_lo = 0.6;
  double r_hi = 1.6;
  double min_sin_theta = 0.3;
  // Keep phi away from the atan2 cut at +/- pi by this margin.
  double phi_margin = 0.3;
};

std::vector<Vec3> sample_points(Rng& rng, int count,
                                const PointSampling& s = {});

}  // namespace spinab
