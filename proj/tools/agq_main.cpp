// Copyright 2026 The agq Authors
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

#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace agq::cli;

void add_curve_options(CLI::App* cmd, CurveArgs& a) {
  cmd->add_option("--family", a.family, "hermitian or superelliptic")
      ->check(CLI::IsMember({"hermitian", "superelliptic"}))
      ->capture_default_str();
  cmd->add_option("--q", a.q, "base field order q")->capture_default_str();
  cmd->add_option("--m", a.m, "exponent m of y^n = x^m + x")->capture_default_str();
}

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-point AG codes: construction, verification, stabilizer parameters, simulation"};
  app.set_version_flag("--version", AGQ_VERSION);
  app.require_subcommand(1);

  FieldInfoArgs fi;
  auto* field_cmd = app.add_subcommand("field-info", "print a finite field's modulus and generator");
  field_cmd->add_option("--p", fi.p, "characteristic")->required();
  field_cmd->add_option("--e", fi.e, "extension degree")->required();

  CodeReportArgs cr;
  auto* report_cmd = app.add_subcommand("code-report", "build C_r and report its parameters as JSON");
  add_curve_options(report_cmd, cr.curve);
  report_cmd->add_option("--r", cr.r, "pole order bound")->required();
  report_cmd->add_option("--budget", cr.budget, "max codewords to enumerate");
  report_cmd->add_option("--threads", cr.threads, "worker threads, 0 = all cores");
  report_cmd->add_flag("--no-weights", cr.no_weights, "skip the weight distribution");
  report_cmd->add_option("--out", cr.out, "output file (default stdout)");

  QuantumTableArgs qt;
  auto* qt_cmd = app.add_subcommand("quantum-table", "tabulate stabilizer code parameters");
  qt_cmd->add_option("--q", qt.q)->required();
  qt_cmd->add_option("--m", qt.m)->required();
  qt_cmd->add_option("--r-min", qt.r_min)->required();
  qt_cmd->add_option("--r-max", qt.r_max)->required();
  qt_cmd->add_option("--format", qt.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  qt_cmd->add_option("--known", qt.known, "CSV of known codes (n,k,d,reference)");
  qt_cmd->add_option("--out", qt.out, "output file (default stdout)");

  SimulateArgs sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo decoding simulation");
  add_curve_options(sim_cmd, sim.curve);
  sim_cmd->add_option("--r", sim.r, "build C_r from the curve");
  sim_cmd->add_option("--matrix", sim.matrix, "generator matrix file")->check(CLI::ExistingFile);
  sim_cmd->add_flag("--preset", sim.preset, "run the built-in three-code sweep");
  sim_cmd->add_option("--rates", sim.rates, "symbol error rates")->delimiter(',')->required();
  sim_cmd->add_option("--trials", sim.trials)->capture_default_str();
  sim_cmd->add_option("--seed", sim.seed)->envname("AGQ_SEED")->capture_default_str();
  sim_cmd->add_option("--threads", sim.threads);
  sim_cmd->add_option("--budget", sim.budget, "max codewords for the distance computation");
  sim_cmd->add_option("--out", sim.out, "output directory")->required();

  ReproduceArgs rep;
  auto* rep_cmd = app.add_subcommand("reproduce", "regenerate the reference results and check goldens");
  rep_cmd->add_option("--out", rep.out, "output directory")->required();
  rep_cmd->add_flag("--skip-sim", rep.skip_sim);
  rep_cmd->add_option("--seed", rep.seed)->envname("AGQ_SEED")->capture_default_str();
  rep_cmd->add_option("--trials", rep.trials)->capture_default_str();
  rep_cmd->add_option("--threads", rep.threads);

  PointsArgs pts;
  auto* pts_cmd = app.add_subcommand("points", "list rational points as CSV");
  add_curve_options(pts_cmd, pts.curve);
  pts_cmd->add_option("--out", pts.out, "output file (default stdout)");

  BasisArgs bas;
  auto* bas_cmd = app.add_subcommand("basis", "monomial basis of L(r P_inf)");
  add_curve_options(bas_cmd, bas.curve);
  bas_cmd->add_option("--r", bas.r)->required();
  bas_cmd->add_option("--semigroup", bas.semigroup, "print the Weierstrass semigroup up to this bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsageError;
  }

  const std::string line = join_args(argc, argv);
  try {
    if (*field_cmd) return field_info(fi);
    if (*report_cmd) return code_report(cr);
    if (*qt_cmd) return quantum_table(qt);
    if (*sim_cmd) return simulate(sim, line);
    if (*rep_cmd) return reproduce(rep, line);
    if (*pts_cmd) return points(pts);
    if (*bas_cmd) return basis(bas);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
