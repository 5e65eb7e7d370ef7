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

#include "commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <fmt/chrono.h>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "agq/quantum.hpp"
#include "agq/simulator.hpp"

#ifndef AGQ_VERSION
#define AGQ_VERSION "unknown"
#endif

namespace agq::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Generator and parity-check matrices for the [8,3] code on y^2 + y = x^3,
// with 0, 1, a, a+1 written as 0..3.
constexpr const char* kReferenceGenerator =
    "q2=4 n=8 k=3\n"
    "1 0 0 1 2 3 1 0\n"
    "0 1 0 1 1 0 3 2\n"
    "0 0 1 1 2 2 3 3\n";
constexpr const char* kReferenceParity =
    "q2=4 n=8 k=5\n"
    "1 0 0 0 0 3 3 1\n"
    "0 1 0 0 0 3 2 0\n"
    "0 0 1 0 0 2 1 2\n"
    "0 0 0 1 0 2 0 3\n"
    "0 0 0 0 1 1 1 1\n";

std::string now_utc() {
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}",
                     std::chrono::floor<std::chrono::seconds>(std::chrono::system_clock::now()));
}

CurveSpec make_curve(const CurveArgs& a) {
  return parse_family(a.family) == CurveFamily::kHermitian ? CurveSpec::hermitian(a.q)
                                                           : CurveSpec::superelliptic(a.q, a.m);
}

json curve_params(const CurveArgs& a) {
  json j{{"family", a.family}, {"q", a.q}};
  if (parse_family(a.family) == CurveFamily::kSuperelliptic) j["m"] = a.m;
  return j;
}

// Writes `text` to `path`, or to stdout when `path` is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  if (const auto parent = fs::path(path).parent_path(); !parent.empty()) fs::create_directories(parent);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path));
  out << text;
  if (!out) throw std::runtime_error(fmt::format("write to '{}' failed", path));
}

class Bundle {
 public:
  explicit Bundle(std::string dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw std::runtime_error(fmt::format("cannot create '{}': {}", dir_, ec.message()));
  }

  void write(const std::string& name, const std::string& text) {
    emit((fs::path(dir_) / name).string(), text);
    outputs_.push_back(name);
  }

  void manifest(const std::string& command, const std::string& command_line, json params,
                std::vector<std::string> inputs, std::optional<std::uint64_t> seed,
                const std::string& started) {
    json m{{"command", command},
           {"command_line", command_line},
           {"parameters", std::move(params)},
           {"inputs", std::move(inputs)},
           {"outputs", outputs_},
           {"version", AGQ_VERSION},
           {"started", started},
           {"finished", now_utc()}};
    m["master_seed"] = seed ? json(*seed) : json();
    emit((fs::path(dir_) / "manifest.json").string(), m.dump(2) + "\n");
  }

 private:
  std::string dir_;
  std::vector<std::string> outputs_;
};

std::string csv_of(const std::vector<SimResult>& blocks,
                   void (*writer)(std::ostream&, const std::vector<SimResult>&)) {
  std::ostringstream out;
  writer(out, blocks);
  return out.str();
}

void write_sim_bundle(Bundle& bundle, const std::vector<SimResult>& blocks) {
  bundle.write("simulation.csv", csv_of(blocks, write_simulation_csv));
  bundle.write("performance.csv", csv_of(blocks, write_performance_series));
  bundle.write("errors.csv", csv_of(blocks, write_error_series));
}

// Collects golden comparisons for the reproduce bundle.
class Goldens {
 public:
  template <class T>
  void check(const std::string& what, const T& got, const T& want) {
    json row{{"check", what}, {"got", got}, {"want", want}, {"ok", got == want}};
    if (!(got == want)) failures_.push_back(what);
    rows_.push_back(std::move(row));
  }
  const std::vector<std::string>& failures() const { return failures_; }
  json to_json() const { return rows_; }

 private:
  json rows_ = json::array();
  std::vector<std::string> failures_;
};

std::uint64_t exact_distance(const LinearCode& code) {
  const auto d = min_distance_bruteforce(code);
  return d.d ? *d.d : 0;
}

}  // namespace

int field_info(const FieldInfoArgs& args) {
  const auto f = Field::make(args.p, args.e);
  json j = f->spec();
  j["order"] = f->size();
  j["modulus_text"] = [&] {
    std::string s = "x^" + std::to_string(args.e);
    const auto& mod = f->modulus();
    for (std::size_t i = mod.size() - 1; i-- > 0;) {
      if (mod[i] == 0) continue;
      std::string term = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
      std::string coef = (mod[i] == 1 && i != 0) ? "" : std::to_string(mod[i]);
      s += " + " + coef + term;
    }
    return s;
  }();
  j["primitive_text"] = f->format(f->primitive());
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int code_report(const CodeReportArgs& args) {
  const Curve curve(make_curve(args.curve));
  ReportOptions opt;
  if (args.budget) opt.budget = args.budget;
  opt.threads = args.threads;
  opt.weights = !args.no_weights;
  const auto rep = make_code_report(curve, args.r, opt);
  json j = rep;
  j["curve_spec"] = curve.spec();
  emit(args.out, j.dump(2) + "\n");
  return kOk;
}

int quantum_table(const QuantumTableArgs& args) {
  std::vector<KnownCode> known;
  if (!args.known.empty()) {
    std::ifstream in(args.known);
    if (!in) throw std::runtime_error(fmt::format("cannot read '{}'", args.known));
    known = read_known_codes(in);
  }
  const auto rows = agq::quantum_table(args.q, args.m, args.r_min, args.r_max, known);
  if (args.format == "json") {
    emit(args.out, quantum_table_json(rows).dump(2) + "\n");
  } else if (args.format == "csv") {
    std::ostringstream out;
    write_quantum_table_csv(out, rows);
    emit(args.out, out.str());
  } else {
    throw std::invalid_argument(fmt::format("unknown format '{}'", args.format));
  }
  return kOk;
}

int simulate(const SimulateArgs& args, const std::string& command_line) {
  const std::string started = now_utc();
  if (args.out.empty()) throw std::invalid_argument("--out is required");
  const int sources = (args.r >= 0) + !args.matrix.empty() + args.preset;
  if (sources != 1) throw std::invalid_argument("choose exactly one of --r, --matrix, --preset");

  SimConfig cfg;
  cfg.error_rates = args.rates;
  cfg.num_transmissions = args.trials;
  cfg.master_seed = args.seed;
  cfg.threads = args.threads;
  if (args.budget) cfg.distance_budget = args.budget;
  cfg.validate();

  json params{{"rates", args.rates}, {"trials", args.trials}, {"threads", args.threads}, {"budget", cfg.distance_budget}};
  std::vector<std::string> inputs;
  std::vector<SimResult> blocks;
  if (args.preset) {
    params["preset"] = true;
    for (const auto& p : sweep_presets()) blocks.push_back(run_simulation(p.code, cfg, p.provenance));
  } else if (!args.matrix.empty()) {
    params["matrix"] = args.matrix;
    inputs.push_back(args.matrix);
    const auto code = load_explicit_code(fs::path(args.matrix));
    blocks.push_back(run_simulation(code, cfg, "explicit: " + args.matrix));
  } else {
    params["curve"] = curve_params(args.curve);
    params["r"] = args.r;
    const Curve curve(make_curve(args.curve));
    const auto code = build_onepoint_code(curve, args.r);
    blocks.push_back(run_simulation(code, cfg, fmt::format("{} r={}", curve.spec().describe(), args.r)));
  }

  Bundle bundle(args.out);
  write_sim_bundle(bundle, blocks);
  bundle.write("simulation.json", json(blocks).dump(2) + "\n");
  bundle.manifest("simulate", command_line, params, inputs, args.seed, started);
  return kOk;
}

int reproduce(const ReproduceArgs& args, const std::string& command_line) {
  const std::string started = now_utc();
  if (args.out.empty()) throw std::invalid_argument("--out is required");
  Bundle bundle(args.out);
  Goldens g;
  json report;

  // Saturated code over GF(4): every vector is a codeword.
  {
    const Curve curve(CurveSpec::hermitian(2));
    const auto code = build_onepoint_code(curve, 20, EvalSet::first(4));
    g.check("saturated n", code.length(), std::size_t{4});
    g.check("saturated k", code.dimension(), std::size_t{4});
    g.check("saturated d", exact_distance(code), std::uint64_t{1});
    g.check("saturated codewords", codeword_count(code), std::uint64_t{256});
    report["saturated"] = {{"code", code.name()}, {"d", exact_distance(code)}, {"codewords", codeword_count(code)}};
  }

  // The [8,3,5] code on y^2 + y = x^3 and its dual.
  {
    const Curve curve(CurveSpec::hermitian(2));
    const auto code = build_onepoint_code(curve, 3);
    const auto dc = dual(code);
    const auto basis = verified_basis(curve, 3, curve.affine_points());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> exps;
    for (const auto& m : basis.monomials) exps.emplace_back(m.i, m.j);
    g.check("hermitian basis {1,x,y}", exps == decltype(exps){{0, 0}, {1, 0}, {0, 1}}, true);
    g.check("hermitian n", code.length(), std::size_t{8});
    g.check("hermitian k", code.dimension(), std::size_t{3});
    g.check("hermitian d", exact_distance(code), std::uint64_t{5});
    g.check("hermitian dual k", dc.dimension(), std::size_t{5});
    g.check("hermitian dual d", exact_distance(dc), std::uint64_t{3});
    g.check("hermitian points", curve.maximality_check().count_points, std::uint64_t{9});

    std::istringstream gin(kReferenceGenerator), hin(kReferenceParity);
    const auto reference = load_explicit_code(gin, "reference generator");
    const auto parity = load_explicit_code(hin, "reference parity check");
    g.check("reference generator weight distribution", weight_distribution(reference), weight_distribution(code));
    g.check("reference parity-check rank", rank(parity.generator()), std::size_t{5});
    const bool orth = (reference.generator() * parity.generator().transpose()).is_zero();
    report["hermitian"] = {{"code", code.name()},
                           {"d", exact_distance(code)},
                           {"dual", dc.name()},
                           {"dual_d", exact_distance(dc)},
                           {"weight_distribution", weight_distribution(code)},
                           {"reference_generator_parity_orthogonal", orth},
                           {"report", make_code_report(curve, 3)}};
    std::ostringstream pts;
    write_points_csv(pts, curve, curve.enumerate_points());
    bundle.write("points_hermitian_q2.csv", pts.str());
  }

  // Stabilizer parameter tables.
  {
    using T = std::array<std::int64_t, 3>;
    auto triples = [](const std::vector<QuantumTableRow>& rows) {
      std::vector<T> out;
      for (const auto& r : rows) out.push_back({r.params.n, r.params.k, r.params.d});
      return out;
    };
    const auto q3 = agq::quantum_table(3, 3, 2, 4);
    const auto q5 = agq::quantum_table(5, 3, 4, 8);
    g.check("quantum q=3", triples(q3), std::vector<T>{{9, 5, 2}, {9, 3, 3}, {9, 1, 4}});
    g.check("quantum q=5", triples(q5),
            std::vector<T>{{25, 19, 2}, {25, 17, 3}, {25, 15, 4}, {25, 13, 5}, {25, 11, 6}});
    bool singleton = true;
    for (const auto* t : {&q3, &q5}) {
      for (const auto& r : *t) singleton = singleton && r.params.singleton_ok();
    }
    g.check("quantum singleton bound", singleton, true);
    std::ostringstream a, b;
    write_quantum_table_csv(a, q3);
    write_quantum_table_csv(b, q5);
    bundle.write("quantum_q3.csv", a.str());
    bundle.write("quantum_q5.csv", b.str());
  }

  // Ground-truth dimensions against the closed form; informational.
  {
    const Curve curve(CurveSpec::superelliptic(3, 3));
    const auto rows = dimension_report(curve, curve.affine_points(), 0, 30);
    std::vector<std::int64_t> disagree;
    for (const auto& r : rows) {
      if (!r.formula_agrees) disagree.push_back(r.r);
    }
    report["dimension_disagreements_q3_m3"] = disagree;
    bundle.write("dimension_report.json", json(rows).dump(2) + "\n");
    g.check("q=3 m=3 points", curve.maximality_check().count_points, std::uint64_t{16});

    json verdicts = json::array();
    for (std::int64_t r = 0; r <= 2; ++r) {
      ReportOptions opt;
      opt.weights = false;
      const json rep = make_code_report(curve, r, opt);
      verdicts.push_back({{"r", r},
                          {"code", rep.at("code")},
                          {"hermitian_self_orthogonal", rep.at("hermitian_self_orthogonal")},
                          {"readings", rep.at("hermitian_readings")}});
    }
    report["hermitian_verdicts_q3_m3"] = verdicts;
  }

  if (!args.skip_sim) {
    SimConfig cfg{{0.0, 0.01, 0.05, 0.1, 0.2, 0.3}, args.trials, args.seed, kDefaultCodewordBudget,
                  args.threads};
    std::vector<SimResult> blocks;
    for (const auto& p : sweep_presets()) blocks.push_back(run_simulation(p.code, cfg, p.provenance));
    write_sim_bundle(bundle, blocks);
    report["simulation"] = blocks;
  }

  report["goldens"] = g.to_json();
  report["failures"] = g.failures();
  bundle.write("report.json", report.dump(2) + "\n");
  bundle.manifest("reproduce", command_line,
                  {{"skip_sim", args.skip_sim}, {"trials", args.trials}, {"threads", args.threads}}, {},
                  args.skip_sim ? std::nullopt : std::optional<std::uint64_t>(args.seed), started);

  for (const auto& f : g.failures()) std::cerr << "golden mismatch: " << f << "\n";
  std::cout << fmt::format("{} golden checks, {} mismatches\n", g.to_json().size(), g.failures().size());
  return g.failures().empty() ? kOk : kGoldenMismatch;
}

int points(const PointsArgs& args) {
  const Curve curve(make_curve(args.curve));
  std::ostringstream out;
  write_points_csv(out, curve, curve.enumerate_points());
  emit(args.out, out.str());
  return kOk;
}

int basis(const BasisArgs& args) {
  const Curve curve(make_curve(args.curve));
  if (args.semigroup >= 0) {
    std::ostringstream out;
    write_semigroup_csv(out, semigroup(curve.spec(), static_cast<std::uint32_t>(args.semigroup)));
    std::cout << out.str();
    return kOk;
  }
  json j = verified_basis(curve, args.r, curve.affine_points());
  j["candidates"] = monomial_count(curve.spec(), args.r);
  std::cout << j.dump(2) << "\n";
  return kOk;
}

}  // namespace agq::cli
