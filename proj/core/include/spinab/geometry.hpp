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
#include <cmath>

namespace spinab {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, const Vec3& a) {
  return {s * a.x, s * a.y, s * a.z};
}
inline Vec3 operator*(const Vec3& a, double s) { return s * a; }
inline Vec3 operator/(const Vec3& a, double s) {
  return {a.x / s, a.y / s, a.z / s};
}
inline double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
          a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 unit(int axis) {
  Vec3 e;
  e[axis] = 1.0;
  return e;
}

// Physics convention: theta is the polar angle from +z, phi the azimuth in
// (-pi, pi] as returned by atan2.
struct SphericalPoint {
  double r = 1.0;
  double theta = 0.5 * 3.14159265358979323846;
  double phi = 0.0;
};

SphericalPoint to_spherical(const Vec3& p);
Vec3 to_cartesian(const SphericalPoint& s);

// Local orthonormal frame (e_r, e_theta, e_phi) expressed in Cartesian
// components.
struct SphericalFrame {
  Vec3 e_r;
  Vec3 e_theta;
  Vec3 e_phi;
};
SphericalFrame spherical_frame(double theta, double phi);

// Cartesian vector from spherical components (v_r, v_theta, v_phi).
Vec3 from_spherical_components(double theta, double phi, double v_r,
                               double v_theta, double v_phi);

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace spinab
