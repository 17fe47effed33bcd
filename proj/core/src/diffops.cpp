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

#include "spinab/diffops.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "spinab/errors.hpp"

namespace spinab {

struct Operator::Node {
  virtual ~Node() = default;
  virtual int depth() const = 0;
  virtual Column eval(const FieldFn& f, const Vec3& p, double h,
                      int order) const = 0;
};

namespace {

using Node = Operator::Node;
using FieldFn = Operator::FieldFn;

struct IdentityNode final : Node {
  int depth() const override { return 0; }
  Column eval(const FieldFn& f, const Vec3& p, double, int) const override {
    return f(p);
  }
};

struct ScaleNode final : Node {
  cplx s;
  std::shared_ptr<const Node> a;
  ScaleNode(cplx s_, std::shared_ptr<const Node> a_) : s(s_), a(std::move(a_)) {}
  int depth() const override { return a->depth(); }
  Column eval(const FieldFn& f, const Vec3& p, double h,
              int order) const override {
    return s * a->eval(f, p, h, order);
  }
};

struct MultiplyNode final : Node {
  ScalarFn fn;
  explicit MultiplyNode(ScalarFn f) : fn(std::move(f)) {}
  int depth() const override { return 0; }
  Column eval(const FieldFn& f, const Vec3& p, double, int) const override {
    return fn(p) * f(p);
  }
};

struct MatrixNode final : Node {
  MatrixFn fn;
  explicit MatrixNode(MatrixFn f) : fn(std::move(f)) {}
  int depth() const override { return 0; }
  Column eval(const FieldFn& f, const Vec3& p, double, int) const override {
    return fn(p) * f(p);
  }
};

struct PositionNode final : Node {
  int axis;
  explicit PositionNode(int a) : axis(a) {}
  int depth() const override { return 0; }
  Column eval(const FieldFn& f, const Vec3& p, double, int) const override {
    return p[axis] * f(p);
  }
};

struct MomentumNode final : Node {
  int axis;
  double hbar;
  MomentumNode(int a, double hb) : axis(a), hbar(hb) {}
  int depth() const override { return 1; }
  Column eval(const FieldFn& f, const Vec3& p, double h,
              int order) const override {
    return cplx(0.0, -hbar) * central_diff(f, p, axis, h, order);
  }
};

struct SumNode final : Node {
  std::shared_ptr<const Node> a, b;
  double sign;
  SumNode(std::shared_ptr<const Node> a_, std::shared_ptr<const Node> b_,
          double s)
      : a(std::move(a_)), b(std::move(b_)), sign(s) {}
  int depth() const override { return std::max(a->depth(), b->depth()); }
  Column eval(const FieldFn& f, const Vec3& p, double h,
              int order) const override {
    return a->eval(f, p, h, order) + sign * b->eval(f, p, h, order);
  }
};

struct ComposeNode final : Node {
  std::shared_ptr<const Node> a, b;  // a after b
  ComposeNode(std::shared_ptr<const Node> a_, std::shared_ptr<const Node> b_)
      : a(std::move(a_)), b(std::move(b_)) {}
  int depth() const override { return a->depth() + b->depth(); }
  Column eval(const FieldFn& f, const Vec3& p, double h,
              int order) const override {
    const Node* inner = b.get();
    FieldFn bf = [inner, &f, h, order](const Vec3& q) {
      return inner->eval(f, q, h, order);
    };
    return a->eval(bf, p, h, order);
  }
};

std::shared_ptr<const Node> identity_node() {
  static const auto node = std::make_shared<const IdentityNode>();
  return node;
}

void require_axis(int axis) {
  if (axis < 0 || axis > 2) {
    throw Error(ErrorKind::kUsage, "operator axis must be 0, 1 or 2");
  }
}

double choose_step(const Operator& op, const FDScheme& scheme) {
  return op.depth() >= 2 ? scheme.h2 : scheme.h1;
}

void require_finite(const Column& c, const char* what) {
  for (int i = 0; i < c.dim(); ++i) {
    if (!std::isfinite(c[i].real()) || !std::isfinite(c[i].imag())) {
      throw Error(ErrorKind::kDomain,
                  std::string(what) + ": non-finite value inside stencil");
    }
  }
}

double norm3(const std::array<Column, 3>& v) {
  double s = 0.0;
  for (const Column& c : v) s += c.norm() * c.norm();
  return std::sqrt(s);
}

std::array<Column, 3> diff3(const std::array<Column, 3>& a,
                            const std::array<Column, 3>& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

}  // namespace

void FDScheme::validate() const {
  if (!(h1 > 0.0) || !(h2 > 0.0) || (order != 2 && order != 4)) {
    throw Error(ErrorKind::kUsage, "FDScheme: need h1, h2 > 0 and order 2 or 4");
  }
}

std::array<Column, 3> momentum_apply(const SpinorField& f, const Vec3& p,
                                     const FDScheme& scheme,
                                     const UnitConventions& units) {
  scheme.validate();
  units.validate();
  std::array<Column, 3> out;
  for (int a = 0; a < 3; ++a) {
    out[a] = cplx(0.0, -units.hbar) *
             central_diff(f.eval, p, a, scheme.h1, scheme.order);
    require_finite(out[a], "momentum_apply");
  }
  return out;
}

MatVec3 fd_gradient(const MatrixFn& f, const Vec3& p, double h, int order) {
  return {central_diff(f, p, 0, h, order), central_diff(f, p, 1, h, order),
          central_diff(f, p, 2, h, order)};
}

SpinMatrix fd_divergence(const MatVecFn& f, const Vec3& p, double h,
                         int order) {
  SpinMatrix div = central_diff([&](const Vec3& q) { return f(q)[0]; }, p, 0, h,
                                order);
  div += central_diff([&](const Vec3& q) { return f(q)[1]; }, p, 1, h, order);
  div += central_diff([&](const Vec3& q) { return f(q)[2]; }, p, 2, h, order);
  return div;
}

MatVec3 fd_curl(const MatVecFn& f, const Vec3& p, double h, int order) {
  auto d = [&](int comp, int axis) {
    return central_diff([&](const Vec3& q) { return f(q)[comp]; }, p, axis, h,
                        order);
  };
  return {d(2, 1) - d(1, 2), d(0, 2) - d(2, 0), d(1, 0) - d(0, 1)};
}

Vec3 fd_curl(const std::function<Vec3(const Vec3&)>& f, const Vec3& p,
             double h, int order) {
  auto d = [&](int comp, int axis) {
    return central_diff([&](const Vec3& q) { return f(q)[comp]; }, p, axis, h,
                        order);
  };
  return {d(2, 1) - d(1, 2), d(0, 2) - d(2, 0), d(1, 0) - d(0, 1)};
}

Operator::Operator() : node_(identity_node()) {}
Operator::Operator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Operator Operator::identity() { return Operator(); }

Operator Operator::scalar(cplx s) {
  return Operator(std::make_shared<const ScaleNode>(s, identity_node()));
}

Operator Operator::multiply(ScalarFn f) {
  return Operator(std::make_shared<const MultiplyNode>(std::move(f)));
}

Operator Operator::matrix(MatrixFn m) {
  return Operator(std::make_shared<const MatrixNode>(std::move(m)));
}

Operator Operator::constant(const SpinMatrix& m) {
  return matrix([m](const Vec3&) { return m; });
}

Operator Operator::position(int axis) {
  require_axis(axis);
  return Operator(std::make_shared<const PositionNode>(axis));
}

Operator Operator::momentum(int axis, const UnitConventions& units) {
  require_axis(axis);
  units.validate();
  return Operator(std::make_shared<const MomentumNode>(axis, units.hbar));
}

int Operator::depth() const { return node_->depth(); }

Column Operator::eval(const FieldFn& f, const Vec3& p, double h,
                      int order) const {
  return node_->eval(f, p, h, order);
}

Operator operator+(const Operator& a, const Operator& b) {
  return Operator(std::make_shared<const SumNode>(a.node_, b.node_, 1.0));
}

Operator operator-(const Operator& a, const Operator& b) {
  return Operator(std::make_shared<const SumNode>(a.node_, b.node_, -1.0));
}

Operator operator*(const Operator& a, const Operator& b) {
  return Operator(std::make_shared<const ComposeNode>(a.node_, b.node_));
}

Operator operator*(cplx s, const Operator& a) {
  return Operator(std::make_shared<const ScaleNode>(s, a.node_));
}

Operator operator-(const Operator& a) { return -1.0 * a; }

OpVec3 position_vec() {
  return {Operator::position(0), Operator::position(1), Operator::position(2)};
}

OpVec3 momentum_vec(const UnitConventions& units) {
  return {Operator::momentum(0, units), Operator::momentum(1, units),
          Operator::momentum(2, units)};
}

OpVec3 angular_momentum_vec(const UnitConventions& units) {
  return cross(position_vec(), momentum_vec(units));
}

OpVec3 constant_vec(const MatVec3& m) {
  return {Operator::constant(m[0]), Operator::constant(m[1]),
          Operator::constant(m[2])};
}

OpVec3 matrix_vec(const MatVecFn& f) {
  OpVec3 out;
  for (int i = 0; i < 3; ++i) {
    out[i] = Operator::matrix([f, i](const Vec3& p) { return f(p)[i]; });
  }
  return out;
}

OpVec3 operator+(const OpVec3& a, const OpVec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

OpVec3 operator-(const OpVec3& a, const OpVec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

OpVec3 operator*(cplx s, const OpVec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

OpVec3 operator*(const Operator& s, const OpVec3& a) {
  return {s * a[0], s * a[1], s * a[2]};
}

Operator dot(const OpVec3& a, const OpVec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

OpVec3 cross(const OpVec3& a, const OpVec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Operator commutator(const Operator& a, const Operator& b) {
  return a * b - b * a;
}

Column op_apply(const Operator& op, const SpinorField& f, const Vec3& p,
                const FDScheme& scheme) {
  scheme.validate();
  if (!f.eval) throw Error(ErrorKind::kUsage, "op_apply: empty field");
  Column out = op.eval(f.eval, p, choose_step(op, scheme), scheme.order);
  require_finite(out, "op_apply");
  return out;
}

std::array<Column, 3> op_apply(const OpVec3& op, const SpinorField& f,
                               const Vec3& p, const FDScheme& scheme) {
  return {op_apply(op[0], f, p, scheme), op_apply(op[1], f, p, scheme),
          op_apply(op[2], f, p, scheme)};
}

Column commutator_apply(const Operator& a, const Operator& b,
                        const SpinorField& f, const Vec3& p,
                        const FDScheme& scheme) {
  return op_apply(commutator(a, b), f, p, scheme);
}

double relative_residual(const Column& lhs, const Column& rhs) {
  return (lhs - rhs).norm() / std::max(rhs.norm(), 1e-8);
}

double relative_residual(const std::array<Column, 3>& lhs,
                         const std::array<Column, 3>& rhs) {
  return norm3(diff3(lhs, rhs)) / std::max(norm3(rhs), 1e-8);
}

double scaled_residual(const Column& lhs, const Column& rhs, double scale) {
  return (lhs - rhs).norm() / std::max(scale, 1e-8);
}

double scaled_residual(const std::array<Column, 3>& lhs,
                       const std::array<Column, 3>& rhs, double scale) {
  return norm3(diff3(lhs, rhs)) / std::max(scale, 1e-8);
}

SpinorField gaussian_wave_field(const GaussianWave& w) {
  if (!(w.width > 0.0)) {
    throw Error(ErrorKind::kUsage, "gaussian_wave_field: width must be > 0");
  }
  return {w.spinor.dim(), [w](const Vec3& p) {
            const Vec3 d = p - w.center;
            const cplx e = std::exp(cplx(-dot(d, d) / (w.width * w.width),
                                         dot(w.k, p)));
            return e * w.spinor;
          }};
}

std::vector<GaussianWave> make_gaussian_waves(Rng& rng, int count, int dim,
                                              const Vec3& near) {
  std::vector<GaussianWave> out;
  out.reserve(count);
  for (int n = 0; n < count; ++n) {
    GaussianWave w;
    w.k = {rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
           rng.uniform(-1.5, 1.5)};
    w.center = near + Vec3{rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3),
                           rng.uniform(-0.3, 0.3)};
    w.width = rng.uniform(1.0, 2.0);
    w.spinor = Column(dim);
    for (int i = 0; i < dim; ++i) {
      w.spinor[i] = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
    w.spinor *= 1.0 / w.spinor.norm();
    out.push_back(w);
  }
  return out;
}

std::vector<Vec3> sample_points(Rng& rng, int count, const PointSampling& s) {
  if (!(s.r_lo > 0.0 && s.r_hi >= s.r_lo && s.min_sin_theta >= 0.0 &&
        s.min_sin_theta < 1.0 && s.phi_margin >= 0.0 && s.phi_margin < kPi)) {
    throw Error(ErrorKind::kUsage, "sample_points: invalid sampling box");
  }
  const double t0 = std::asin(s.min_sin_theta);
  std::vector<Vec3> out;
  out.reserve(count);
  for (int n = 0; n < count; ++n) {
    SphericalPoint sp;
    sp.r = rng.uniform(s.r_lo, s.r_hi);
    sp.theta = rng.uniform(t0, kPi - t0);
    sp.phi = rng.uniform(-kPi + s.phi_margin, kPi - s.phi_margin);
    out.push_back(to_cartesian(sp));
  }
  return out;
}

}  // namespace spinab
