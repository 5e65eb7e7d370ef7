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
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "agq/agcode.hpp"

/// Monte-Carlo transmission over a q-ary symmetric channel with syndrome
/// check plus single-symbol search decoding.
namespace agq {

/// SplitMix64. Each trial owns one stream keyed by (master seed, rate
/// index, trial index), which makes results independent of scheduling.
class TrialRng {
 public:
  using result_type = std::uint64_t;

  explicit TrialRng(std::uint64_t state) : state_(state) {}
  static TrialRng for_trial(std::uint64_t master_seed, std::uint64_t rate_index,
                            std::uint64_t trial_index);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  /// Uniform double in [0, 1).
  double uniform();
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

std::vector<Symbol> encode(const LinearCode& code, std::span<const Symbol> message);

struct CorruptedWord {
  std::vector<Symbol> word;
  std::size_t errors = 0;
};

/// Each position is replaced, with probability `rate`, by a uniformly random
/// different symbol.
CorruptedWord apply_random_errors(const Field& field, std::span<const Symbol> codeword,
                                  double rate, TrialRng& rng);

enum class DecodeStatus { kSuccess, kCorrected, kFailure };
std::string to_string(DecodeStatus status);

struct DecodeResult {
  DecodeStatus status = DecodeStatus::kFailure;
  std::optional<std::vector<Symbol>> word;
};

/// Zero syndrome returns the word unchanged. Otherwise positions are tried
/// in order and, per position, the other q-1 symbols in canonical order;
/// the first substitution with zero syndrome wins.
DecodeResult decode_goppa(const LinearCode& code, std::span<const Symbol> received);

/// Per-rate aggregate. `successes` counts both kSuccess and kCorrected;
/// `miscorrected` counts successes whose output differs from the
/// transmitted codeword.
struct RateMetrics {
  double rate = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t clean = 0;
  std::uint64_t corrected = 0;
  std::uint64_t uncorrectable = 0;
  std::uint64_t miscorrected = 0;
  std::uint64_t total_errors = 0;

  double success_rate() const { return static_cast<double>(successes) / trials; }
  double uncorrectable_rate() const { return static_cast<double>(uncorrectable) / trials; }
  double avg_errors() const { return static_cast<double>(total_errors) / trials; }
};

/// `rate_index` selects the RNG streams; threads = 0 uses the hardware
/// concurrency. The result is identical for every thread count.
RateMetrics simulate_transmission(const LinearCode& code, double rate, std::uint64_t trials,
                                  std::uint64_t seed, std::uint64_t rate_index = 0,
                                  unsigned threads = 0);

struct SimConfig {
  std::vector<double> error_rates;
  std::uint64_t num_transmissions = 0;
  std::uint64_t master_seed = 0;
  std::uint64_t distance_budget = kDefaultCodewordBudget;
  unsigned threads = 0;

  /// Throws std::invalid_argument on rates outside [0, 1] or zero trials.
  void validate() const;
};

struct SimResult {
  std::string code;
  std::size_t n = 0;
  std::size_t k = 0;
  std::optional<std::uint64_t> d;
  std::uint64_t seed = 0;
  std::string provenance;
  std::vector<RateMetrics> rates;
};

SimResult run_simulation(const LinearCode& code, const SimConfig& config,
                         std::string provenance = {});

struct PresetCode {
  LinearCode code;
  std::string provenance;
};

/// Three constructible codes for the default sweep. The [8,2,6], [16,4,13]
/// and [32,3,28] codes over GF(16) cannot be built from an odd-q curve of
/// this family.
std::vector<PresetCode> sweep_presets();

/// Header "code,n,k,d,rate,trials,success_rate,uncorrectable_rate,avg_errors,seed".
void write_simulation_csv(std::ostream& out, const std::vector<SimResult>& blocks);
/// Rate against decode success and detected-uncorrectable rates.
void write_performance_series(std::ostream& out, const std::vector<SimResult>& blocks);
/// Rate against average injected errors per transmission.
void write_error_series(std::ostream& out, const std::vector<SimResult>& blocks);

void to_json(nlohmann::json& j, const RateMetrics& m);
void to_json(nlohmann::json& j, const SimResult& r);

}  // namespace agq
