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

#include <benchmark/benchmark.h>

#include "spinab/dirac.hpp"
#include "spinab/interference.hpp"
#include "spinab/specfun.hpp"
#include "spinab/spectra.hpp"

using namespace spinab;

static void BM_BesselJ(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0)) + 0.5;
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j(nu, x));
    x = x < 30.0 ? x + 0.37 : 0.1;
  }
}
BENCHMARK(BM_BesselJ)->Arg(0)->Arg(5)->Arg(25);

static void BM_Hyp1F1(benchmark::State& state) {
  double tau = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hyp1f1(1.75, 4.5, tau));
    tau = tau < 45.0 ? tau + 1.3 : 1.0;
  }
}
BENCHMARK(BM_Hyp1F1);

static void BM_SphHarm(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sph_harm(l, l / 2, 0.7, 1.1));
}
BENCHMARK(BM_SphHarm)->Arg(2)->Arg(10)->Arg(30);

static void BM_HSpinApply(benchmark::State& state) {
  const SpinorField f = spin_field({2.0, 2, 1, Branch::kA}, EnergySpec::spherical(1.0));
  const Operator h = h_spin(2.0);
  const Vec3 q{0.6, 0.4, 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(op_apply(h, f, q));
}
BENCHMARK(BM_HSpinApply);

static void BM_DiracSquare(benchmark::State& state) {
  Rng rng(1);
  std::vector<SpinorField> fields;
  for (const GaussianWave& w : make_gaussian_waves(rng, 1, 8, {0.7, 0.5, 0.6})) {
    fields.push_back(gaussian_wave_field(w));
  }
  const std::vector<Vec3> pts = sample_points(rng, 1);
  for (auto _ : state) benchmark::DoNotOptimize(dirac_square_check(2.0, 1.0, fields, pts));
}
BENCHMARK(BM_DiracSquare)->Unit(benchmark::kMillisecond);

static void BM_SpinCurve(benchmark::State& state) {
  CurveParams p;
  p.spin = InterferenceParams::figure(-1, 0, 1, 2, 20, 2, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(curve(CurveKind::kSpin, p, {0.0, 4 * kPi, 1024}));
  }
}
BENCHMARK(BM_SpinCurve);
BENCHMARK_MAIN();
