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

#include <complex>

namespace spinab {

// Truncation policy shared by every power series in this module.
struct SeriesPolicy {
  double rel_tol = 1e-15;
  int max_terms = 500;
  double max_argument = 50.0;

  void validate() const;
};

double gamma(double x);

// Bessel function of the first kind by its power series. Terms are generated
// and accumulated in double-double arithmetic, so the usual cancellation at
// moderate x (up to max_argument) does not eat the result.
double bessel_j(double nu, double x, const SeriesPolicy& policy = {});

// Neumann (Bessel second kind). Integer orders use the symmetric limit
// nu = n +/- 1e-6 of the non-integer quotient.
double neumann(double nu, double x, const SeriesPolicy& policy = {});

// Kummer's confluent hypergeometric function M(a; b; tau).
double hyp1f1(double a, double b, double tau, const SeriesPolicy& policy = {});

// Associated Legendre function with the Condon-Shortley (-1)^m phase, so
// P_1^1(z) = -sqrt(1 - z^2).
double assoc_legendre(int l, int m, double z);

// Orthonormal spherical harmonic; negative m through
// Y_{l,-m} = (-1)^m conj(Y_{lm}).
std::complex<double> sph_harm(int l, int m, double theta, double phi);

}  // namespace spinab
