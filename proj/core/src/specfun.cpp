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

#include "spinab/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinab/errors.hpp"
#include "spinab/geometry.hpp"

namespace spinab {
namespace {

// Minimal double-double arithmetic. Each value is hi + lo with |lo| below
// half an ulp of hi; products use fma for the exact error term.
struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD add(const DD& a, const DD& b) {
  DD s = two_sum(a.hi, b.hi);
  const DD t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD sub(const DD& a, const DD& b) { return add(a, {-b.hi, -b.lo}); }

inline DD mul(const DD& a, const DD& b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD div(const DD& a, const DD& b) {
  const double q1 = a.hi / b.hi;
  DD r = sub(a, mul({q1, 0.0}, b));
  const double q2 = r.hi / b.hi;
  r = sub(r, mul({q2, 0.0}, b));
  const double q3 = r.hi / b.hi;
  return add(quick_two_sum(q1, q2), {q3, 0.0});
}

inline double value(const DD& a) { return a.hi + a.lo; }

bool is_integer(double x) { return std::floor(x) == x; }

// sin(pi x) and cos(pi x) that are exact at integers and half-integers.
double sin_pi(double x) {
  const double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  const double r = x - 2.0 * std::round(0.5 * x);
  if (r == 0.5 || r == -0.5) return 0.0;
  if (r == 0.0) return 1.0;
  if (r == 1.0 || r == -1.0) return -1.0;
  return std::cos(kPi * r);
}

// Sums sum_k t_k where t_{k+1} = t_k * ratio(k). Stops after three
// consecutive terms fall under rel_tol relative to the running sum.
template <typename Ratio>
double sum_series(DD t, Ratio ratio, const SeriesPolicy& policy,
                  const char* name) {
  DD sum = t;
  int quiet = 0;
  for (int k = 0; k < policy.max_terms; ++k) {
    t = mul(t, ratio(k));
    sum = add(sum, t);
    if (std::fabs(t.hi) <= policy.rel_tol * std::fabs(sum.hi)) {
      if (++quiet >= 3) return value(sum);
    } else {
      quiet = 0;
    }
  }
  throw Error(ErrorKind::kAccuracy,
              std::string(name) + ": series did not converge within " +
                  std::to_string(policy.max_terms) + " terms");
}

double bessel_j_series(double nu, double x, const SeriesPolicy& policy) {
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  const double half = 0.5 * x;
  double t0;
  if (std::fabs(nu + 1.0) <= 30.0) {
    t0 = std::pow(half, nu) / gamma(nu + 1.0);
  } else if (nu > 0.0) {
    // Gamma(nu+1) overflows past ~171; the log route keeps the ratio finite.
    t0 = std::exp(nu * std::log(half) - std::lgamma(nu + 1.0));
  } else {
    throw Error(ErrorKind::kDomain, "bessel_j: order below -31 unsupported");
  }
  DD q = two_prod(half, half);
  q = {-q.hi, -q.lo};
  auto ratio = [&](int k) {
    const double kp1 = static_cast<double>(k + 1);
    const DD den = mul(two_sum(nu, kp1), {kp1, 0.0});
    return div(q, den);
  };
  return sum_series({t0, 0.0}, ratio, policy, "bessel_j");
}

double neumann_quotient(double nu, double x, const SeriesPolicy& policy) {
  const double jp = bessel_j(nu, x, policy);
  const double jm = bessel_j(-nu, x, policy);
  return (jp * cos_pi(nu) - jm) / sin_pi(nu);
}

}  // namespace

void SeriesPolicy::validate() const {
  if (!(rel_tol > 0.0) || max_terms < 1 || !(max_argument > 0.0)) {
    throw Error(ErrorKind::kUsage, "SeriesPolicy: invalid field values");
  }
}

double gamma(double x) {
  if (x <= 0.0 && is_integer(x)) {
    throw Error(ErrorKind::kDomain, "gamma: pole at non-positive integer");
  }
  if (x < 0.5) {
    // Reflection formula.
    return kPi / (sin_pi(x) * gamma(1.0 - x));
  }
  static constexpr double kG = 7.0;
  static constexpr double kCoef[9] = {
      0.99999999999980993,     676.5203681218851,
      -1259.1392167224028,     771.32342877765313,
      -176.61502916214059,     12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6,
      1.5056327351493116e-7};
  const double xm = x - 1.0;
  double a = kCoef[0];
  const double t = xm + kG + 0.5;
  for (int i = 1; i < 9; ++i) a += kCoef[i] / (xm + i);
  return std::sqrt(2.0 * kPi) * std::pow(t, xm + 0.5) * std::exp(-t) * a;
}

double bessel_j(double nu, double x, const SeriesPolicy& policy) {
  policy.validate();
  if (x < 0.0) throw Error(ErrorKind::kDomain, "bessel_j: x must be >= 0");
  if (x > policy.max_argument) {
    throw Error(ErrorKind::kRange, "bessel_j: x exceeds max_argument");
  }
  if (nu < 0.0 && is_integer(nu)) {
    const double n = -nu;
    const double j = bessel_j_series(n, x, policy);
    return std::fmod(n, 2.0) == 0.0 ? j : -j;
  }
  if (nu < 0.0 && x == 0.0) {
    throw Error(ErrorKind::kDomain,
                "bessel_j: negative non-integer order is singular at x = 0");
  }
  return bessel_j_series(nu, x, policy);
}

double neumann(double nu, double x, const SeriesPolicy& policy) {
  if (!(x > 0.0)) throw Error(ErrorKind::kDomain, "neumann: x must be > 0");
  if (is_integer(nu)) {
    // The quotient is 0/0 here; the standard library has the limit.
    if (x > policy.max_argument) {
      throw Error(ErrorKind::kRange, "neumann: x exceeds max_argument");
    }
    const double n = std::fabs(nu);
    const double y = std::cyl_neumann(n, x);
    return (nu < 0.0 && std::fmod(n, 2.0) != 0.0) ? -y : y;
  }
  return neumann_quotient(nu, x, policy);
}

double hyp1f1(double a, double b, double tau, const SeriesPolicy& policy) {
  policy.validate();
  if (b <= 0.0 && is_integer(b)) {
    throw Error(ErrorKind::kDomain,
                "hyp1f1: gamma parameter is a non-positive integer");
  }
  if (std::fabs(tau) > policy.max_argument) {
    throw Error(ErrorKind::kRange, "hyp1f1: |tau| exceeds max_argument");
  }
  if (tau == 0.0) return 1.0;
  auto ratio = [&](int k) {
    const double kd = static_cast<double>(k);
    const DD num = mul(two_sum(a, kd), {tau, 0.0});
    const DD den = mul(two_sum(b, kd), {kd + 1.0, 0.0});
    return div(num, den);
  };
  return sum_series({1.0, 0.0}, ratio, policy, "hyp1f1");
}

double assoc_legendre(int l, int m, double z) {
  if (l < 0 || m < 0 || m > l) {
    throw Error(ErrorKind::kDomain, "assoc_legendre: need 0 <= m <= l");
  }
  if (std::fabs(z) > 1.0 + 1e-14) {
    throw Error(ErrorKind::kDomain, "assoc_legendre: |z| must be <= 1");
  }
  z = std::clamp(z, -1.0, 1.0);
  // P_m^m = (-1)^m (2m-1)!! (1-z^2)^{m/2}
  const double s = std::sqrt((1.0 - z) * (1.0 + z));
  double pmm = 1.0;
  for (int i = 1; i <= m; ++i) pmm *= -(2.0 * i - 1.0) * s;
  if (l == m) return pmm;
  double pm1 = z * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pm1;
  double pl = 0.0;
  for (int ll = m + 2; ll <= l; ++ll) {
    pl = (z * (2.0 * ll - 1.0) * pm1 - (ll + m - 1.0) * pmm) / (ll - m);
    pmm = pm1;
    pm1 = pl;
  }
  return pl;
}

std::complex<double> sph_harm(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l) {
    throw Error(ErrorKind::kDomain, "sph_harm: need |m| <= l");
  }
  if (m < 0) {
    const std::complex<double> y = std::conj(sph_harm(l, -m, theta, phi));
    return (m % 2 == 0) ? y : -y;
  }
  // (l-m)!/(l+m)! as a running product keeps large l finite.
  double ratio = 1.0;
  for (int k = l - m + 1; k <= l + m; ++k) ratio /= k;
  const double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * kPi) * ratio);
  const double p = assoc_legendre(l, m, std::cos(theta));
  return norm * p * std::polar(1.0, m * phi);
}

}  // namespace spinab
