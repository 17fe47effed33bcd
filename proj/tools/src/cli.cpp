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

#include "spinab_cli/cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <regex>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "spinab/errors.hpp"
#include "spinab/geometry.hpp"
#include "spinab/interference.hpp"
#include "spinab/spectra.hpp"
#include "spinab/suites.hpp"

namespace spinab::cli {
namespace {

struct RunConfig {
  std::uint64_t seed = 42;
  double tol_scale = 1.0;
  std::string out_path;
  std::string suite = "all";
};

struct CurveOptions {
  std::string kind;
  int n = 1024;
  std::string min = "0";
  std::string max = "4pi";
  double N = 0.5;
  std::string delta2 = "0";
  std::vector<double> mu{-1.0, 0.0, 1.0, 2.0};
  int l = 20;
  int m = 2;
  bool raw_N = false;
};

struct KappaOptions {
  double g = 2.0;
  int lmax = 3;
};

// Writes to the file when a path is given, otherwise to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw Error(ErrorKind::kPath, "cannot open '" + path + "' for writing");
      os_ = &file_;
    }
  }
  std::ostream& os() { return *os_; }
  void finish(const std::string& path) {
    os_->flush();
    if (!*os_) throw Error(ErrorKind::kPath, "write to '" + path + "' failed");
  }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  SuiteConfig sc;
  sc.seed = cfg.seed;
  sc.tol_scale = cfg.tol_scale;
  const std::vector<CheckResult> results = run_suite(parse_suite(cfg.suite), sc);
  int pass = 0, fail = 0;
  for (const CheckResult& r : results) {
    out << format_check(r) << '\n';
    (r.pass ? pass : fail)++;
  }
  bool io_ok = true;
  if (!cfg.out_path.empty()) {
    try {
      Sink sink(cfg.out_path, out);
      sink.os() << "name,residual,threshold,status\n";
      for (const CheckResult& r : results) {
        sink.os() << r.name << ',' << csv_number(r.residual) << ','
                  << csv_number(r.threshold) << ',' << (r.pass ? "PASS" : "FAIL")
                  << '\n';
      }
      sink.finish(cfg.out_path);
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      io_ok = false;
    }
  }
  out << "SUMMARY pass=" << pass << " fail=" << fail << '\n';
  return fail == 0 && io_ok ? kExitOk : kExitFail;
}

int cmd_curve(const CurveOptions& o, const RunConfig& cfg, std::ostream& out) {
  const CurveKind kind = parse_curve_kind(o.kind);
  CurveParams params;
  params.N = o.N;
  params.delta2 = parse_angle(o.delta2);
  if (kind == CurveKind::kSpin) {
    if (o.mu.size() != 4) throw Error(ErrorKind::kUsage, "--mu takes four values");
    params.spin = InterferenceParams::figure(o.mu[0], o.mu[1], o.mu[2], o.mu[3], o.l,
                                            o.m, !o.raw_N);
    if (o.raw_N) params.spin.N = o.N;
  }
  const DeltaGrid grid{parse_angle(o.min), parse_angle(o.max), o.n};
  const std::vector<CurveSample> rows = curve(kind, params, grid);

  Sink sink(cfg.out_path, out);
  sink.os() << "delta,P\n";
  for (const CurveSample& s : rows) {
    sink.os() << csv_number(s.delta) << ',' << csv_number(s.value) << '\n';
  }
  sink.finish(cfg.out_path);
  return kExitOk;
}

int cmd_kappa(const KappaOptions& o, const RunConfig& cfg, std::ostream& out) {
  if (o.lmax < 0) throw Error(ErrorKind::kUsage, "--lmax must be >= 0");
  Sink sink(cfg.out_path, out);
  sink.os() << "l,branch,K,kappa,nu\n";
  for (int l = 0; l <= o.lmax; ++l) {
    for (Branch b : {Branch::kA, Branch::kB}) {
      if (b == Branch::kB && l == 0) continue;  // j = l - 1/2 needs l >= 1
      const SpinQN qn{o.g, l, 0, b};
      sink.os() << l << ',' << to_string(b) << ',' << csv_number(qn.K()) << ','
                << csv_number(kappa(qn)) << ',' << csv_number(nu(qn)) << '\n';
    }
  }
  sink.finish(cfg.out_path);
  return kExitOk;
}

}  // namespace

double parse_angle(const std::string& text) {
  static const std::regex pi_form(
      R"(^\s*([+-]?)(\d+(?:\.\d*)?|\.\d+)?\s*pi(?:\s*/\s*(\d+))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    const double coef = m[2].matched ? std::stod(m[2].str()) : 1.0;
    const double den = m[3].matched ? std::stod(m[3].str()) : 1.0;
    if (den == 0.0) throw Error(ErrorKind::kUsage, "zero denominator in '" + text + "'");
    const double v = coef * kPi / den;
    return m[1].str() == "-" ? -v : v;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw Error(ErrorKind::kUsage, "bad angle '" + text + "'");
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used != text.size()) throw Error(ErrorKind::kUsage, "bad angle '" + text + "'");
  return v;
}

std::string csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"spinab: spin and magnetic Aharonov-Bohm verification tool"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; command-line flags take precedence");

  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "random seed for test fields and points")
      ->capture_default_str();
  app.add_option("--tol-scale,--tol_scale", cfg.tol_scale, "multiply every threshold")
      ->capture_default_str();
  app.add_option("--out,--out_path", cfg.out_path, "CSV output path (default stdout)");
  app.add_option("--suite", cfg.suite, "all|algebra|potentials|eigen|interference|dirac")
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");

  CurveOptions co;
  CLI::App* curve_cmd = app.add_subcommand("curve", "interference probability table");
  curve_cmd->add_option("--kind", co.kind, "ordinary|magnetic|spin")->required();
  curve_cmd->add_option("--n", co.n, "grid points")->capture_default_str();
  curve_cmd->add_option("--min", co.min, "grid start angle")->capture_default_str();
  curve_cmd->add_option("--max", co.max, "grid end angle")->capture_default_str();
  curve_cmd->add_option("--N", co.N, "amplitude normalization")->capture_default_str();
  curve_cmd->add_option("--delta2", co.delta2, "AB phase for the magnetic curve")
      ->capture_default_str();
  curve_cmd->add_option("--mu", co.mu, "mu1 mu2 mu3 mu4")->expected(4);
  curve_cmd->add_option("--l", co.l)->capture_default_str();
  curve_cmd->add_option("--m", co.m)->capture_default_str();
  curve_cmd->add_flag("--raw-N", co.raw_N, "use --N instead of the normalized N");

  KappaOptions ko;
  CLI::App* kappa_cmd = app.add_subcommand("kappa", "kappa and nu table per branch");
  kappa_cmd->add_option("--g", ko.g)->capture_default_str();
  kappa_cmd->add_option("--lmax", ko.lmax)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (!(cfg.tol_scale > 0.0)) throw Error(ErrorKind::kUsage, "--tol-scale must be > 0");
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (curve_cmd->parsed()) return cmd_curve(co, cfg, out);
    if (kappa_cmd->parsed()) return cmd_kappa(ko, cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::kPath) return kExitFail;
    err << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace spinab::cli
