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

// Prints one PASS/FAIL line per acceptance criterion. argv[1] is the spinab
// executable, used for the determinism criterion.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "spinab/suites.hpp"

namespace fs = std::filesystem;
using namespace spinab;

namespace {

struct Group {
  std::vector<CheckResult> checks;
  double seconds = 0.0;  // total time of the suites contributing checks
};

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

// Runs the command, returning its exit status and captured stdout.
int capture(const std::string& cmd, std::string& out) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  std::size_t n;
  out.clear();
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  return pclose(pipe);
}

bool determinism(const std::string& exe, std::string& detail) {
  const fs::path dir = fs::temp_directory_path();
  const fs::path a = dir / "spinab_accept_a.csv", b = dir / "spinab_accept_b.csv";
  std::string out_a, out_b;
  const std::string base = "\"" + exe + "\" --suite all --seed 42 --out ";
  capture(base + "\"" + a.string() + "\" verify", out_a);
  capture(base + "\"" + b.string() + "\" verify", out_b);
  const std::string csv_a = slurp(a), csv_b = slurp(b);
  fs::remove(a);
  fs::remove(b);
  const bool ok = !out_a.empty() && !csv_a.empty() && out_a == out_b && csv_a == csv_b;
  detail = "stdout " + std::to_string(out_a.size()) + " bytes " +
           (out_a == out_b ? "identical" : "differ") + ", csv " +
           std::to_string(csv_a.size()) + " bytes " + (csv_a == csv_b ? "identical" : "differ");
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  const double limits[] = {0, 1, 5, 1, 60, 5, 5, 2, 120, 10};
  std::map<int, Group> groups;
  for (Suite s : {Suite::kAlgebra, Suite::kPotentials, Suite::kEigen, Suite::kInterference,
                  Suite::kDirac}) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<CheckResult> rs = run_suite(s);
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::map<int, bool> touched;
    for (const CheckResult& r : rs) {
      if (r.criterion < 1) continue;
      groups[r.criterion].checks.push_back(r);
      touched[r.criterion] = true;
    }
    for (const auto& [c, _] : touched) groups[c].seconds += dt;
  }

  int failed = 0;
  for (int c = 1; c <= 9; ++c) {
    const Group& g = groups[c];
    bool ok = !g.checks.empty() && g.seconds < limits[c];
    int bad = 0;
    std::string detail;
    for (const CheckResult& r : g.checks) {
      if (r.pass) continue;
      ok = false;
      ++bad;
      char buf[160];
      std::snprintf(buf, sizeof buf, "; %s residual %.4e > %.4e", r.name.c_str(),
                    r.residual, r.threshold);
      detail += buf;
    }
    if (!ok) ++failed;
    std::printf("Criterion %d: %s (%zu checks, %d failing, %.3f s of %.0f s)%s\n", c,
                ok ? "PASS" : "FAIL", g.checks.size(), bad, g.seconds, limits[c],
                detail.c_str());
  }

  std::string detail = "no executable given";
  bool ok10 = false;
  if (argc > 1) ok10 = determinism(argv[1], detail);
  if (!ok10) ++failed;
  std::printf("Criterion 10: %s (%s)\n", ok10 ? "PASS" : "FAIL", detail.c_str());
  return failed == 0 ? 0 : 1;
}
