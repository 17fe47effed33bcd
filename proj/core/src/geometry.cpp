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

#include "spinab/geometry.hpp"

#include <algorithm>

#include "spinab/errors.hpp"

namespace spinab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kRange: return "range";
    case ErrorKind::kAccuracy: return "accuracy";
    case ErrorKind::kSingularity: return "singularity";
    case ErrorKind::kShape: return "shape";
    case ErrorKind::kUsage: return "usage";
    case ErrorKind::kDegenerate: return "degenerate";
    case ErrorKind::kRejectedBranch: return "rejected-branch";
    case ErrorKind::kNode: return "node";
    case ErrorKind::kPath: return "path";
  }
  return "unknown";
}

SphericalPoint to_spherical(const Vec3& p) {
  SphericalPoint s;
  s.r = norm(p);
  s.theta = s.r > 0.0 ? std::acos(std::clamp(p.z / s.r, -1.0, 1.0)) : 0.0;
  s.phi = std::atan2(p.y, p.x);
  return s;
}

Vec3 to_cartesian(const SphericalPoint& s) {
  const double st = std::sin(s.theta);
  return {s.r * st * std::cos(s.phi), s.r * st * std::sin(s.phi),
          s.r * std::cos(s.theta)};
}

SphericalFrame spherical_frame(double theta, double phi) {
  const double st = std::sin(theta), ct = std::cos(theta);
  const double sp = std::sin(phi), cp = std::cos(phi);
  return {{st * cp, st * sp, ct}, {ct * cp, ct * sp, -st}, {-sp, cp, 0.0}};
}

Vec3 from_spherical_components(double theta, double phi, double v_r,
                               double v_theta, double v_phi) {
  const SphericalFrame f = spherical_frame(theta, phi);
  return v_r * f.e_r + v_theta * f.e_theta + v_phi * f.e_phi;
}

}  // namespace spinab
