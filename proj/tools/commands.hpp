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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace agq::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kGoldenMismatch = 1;
inline constexpr int kUsageError = 2;

struct CurveArgs {
  std::string family = "superelliptic";
  std::uint32_t q = 3;
  std::uint32_t m = 3;
};

struct FieldInfoArgs {
  std::uint32_t p = 0;
  std::uint32_t e = 1;
};

struct CodeReportArgs {
  CurveArgs curve;
  std::int64_t r = 0;
  std::uint64_t budget = 0;
  unsigned threads = 0;
  bool no_weights = false;
  std::string out;
};

struct QuantumTableArgs {
  std::uint32_t q = 0;
  std::uint32_t m = 0;
  std::int64_t r_min = 0;
  std::int64_t r_max = -1;
  std::string format = "csv";
  std::string known;
  std::string out;
};

struct SimulateArgs {
  CurveArgs curve;
  std::int64_t r = -1;  // unset means: use --matrix or --preset
  std::string matrix;
  bool preset = false;
  std::vector<double> rates;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::uint64_t budget = 0;
  std::string out;
};

struct ReproduceArgs {
  std::string out;
  bool skip_sim = false;
  std::uint64_t seed = 0;
  std::uint64_t trials = 10000;
  unsigned threads = 0;
};

struct PointsArgs {
  CurveArgs curve;
  std::string out;
};

struct BasisArgs {
  CurveArgs curve;
  std::int64_t r = 0;
  std::int64_t semigroup = -1;
};

int field_info(const FieldInfoArgs& args);
int code_report(const CodeReportArgs& args);
int quantum_table(const QuantumTableArgs& args);
int simulate(const SimulateArgs& args, const std::string& command_line);
int reproduce(const ReproduceArgs& args, const std::string& command_line);
int points(const PointsArgs& args);
int basis(const BasisArgs& args);

}  // namespace agq::cli
