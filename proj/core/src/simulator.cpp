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

#include "agq/simulator.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

#include <fmt/format.h>

namespace agq {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

TrialRng TrialRng::for_trial(std::uint64_t master_seed, std::uint64_t rate_index,
                             std::uint64_t trial_index) {
  std::uint64_t s = mix64(master_seed + kGolden);
  s = mix64(s ^ (rate_index + 1) * kGolden);
  s = mix64(s ^ (trial_index + 1) * 0xD1B54A32D192ED03ull);
  return TrialRng(s);
}

TrialRng::result_type TrialRng::operator()() {
  state_ += kGolden;
  return mix64(state_);
}

double TrialRng::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

std::uint64_t TrialRng::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = max() - max() % bound;
  std::uint64_t x;
  do {
    x = (*this)();
  } while (x >= limit);
  return x % bound;
}

std::vector<Symbol> encode(const LinearCode& code, std::span<const Symbol> message) {
  if (message.size() != code.dimension()) {
    throw std::invalid_argument(fmt::format("message has length {}, code dimension is {}",
                                            message.size(), code.dimension()));
  }
  return vec_mat(code.field(), message, code.generator());
}

CorruptedWord apply_random_errors(const Field& field, std::span<const Symbol> codeword,
                                  double rate, TrialRng& rng) {
  CorruptedWord out{{codeword.begin(), codeword.end()}, 0};
  const std::uint64_t q = field.size();
  for (auto& s : out.word) {
    if (rng.uniform() < rate) {
      auto v = static_cast<Symbol>(rng.below(q - 1));
      if (v >= s) ++v;
      s = v;
      ++out.errors;
    }
  }
  return out;
}

std::string to_string(DecodeStatus status) {
  switch (status) {
    case DecodeStatus::kSuccess:
      return "success";
    case DecodeStatus::kCorrected:
      return "corrected";
    case DecodeStatus::kFailure:
      return "failure";
  }
  return "";
}

DecodeResult decode_goppa(const LinearCode& code, std::span<const Symbol> received) {
  const Field& f = code.field();
  const Matrix& h = code.parity_check();
  if (received.size() != code.length()) {
    throw std::invalid_argument("received word has the wrong length");
  }
  const auto syndrome = mat_vec(f, h, received);
  const auto is_zero = [](const std::vector<Symbol>& v) {
    return std::all_of(v.begin(), v.end(), [](Symbol s) { return s == 0; });
  };
  if (is_zero(syndrome)) {
    return {DecodeStatus::kSuccess, std::vector<Symbol>(received.begin(), received.end())};
  }
  // Substituting v at position i shifts the syndrome by (v - w_i) * h_col(i).
  for (std::size_t i = 0; i < received.size(); ++i) {
    for (Symbol v = 0; v < f.size(); ++v) {
      if (v == received[i]) continue;
      const Symbol delta = f.sub(v, received[i]);
      bool zero = true;
      for (std::size_t r = 0; r < h.rows() && zero; ++r) {
        zero = f.add(syndrome[r], f.mul(delta, h(r, i))) == 0;
      }
      if (zero) {
        std::vector<Symbol> word(received.begin(), received.end());
        word[i] = v;
        return {DecodeStatus::kCorrected, std::move(word)};
      }
    }
  }
  return {DecodeStatus::kFailure, std::nullopt};
}

namespace {

void run_trials(const LinearCode& code, double rate, std::uint64_t seed, std::uint64_t rate_index,
                std::uint64_t begin, std::uint64_t end, RateMetrics& out) {
  const Field& f = code.field();
  std::vector<Symbol> message(code.dimension());
  for (std::uint64_t t = begin; t < end; ++t) {
    TrialRng rng = TrialRng::for_trial(seed, rate_index, t);
    for (auto& s : message) s = static_cast<Symbol>(rng.below(f.size()));
    const auto codeword = encode(code, message);
    const auto received = apply_random_errors(f, codeword, rate, rng);
    const auto decoded = decode_goppa(code, received.word);
    ++out.trials;
    out.total_errors += received.errors;
    switch (decoded.status) {
      case DecodeStatus::kSuccess:
        ++out.clean;
        break;
      case DecodeStatus::kCorrected:
        ++out.corrected;
        break;
      case DecodeStatus::kFailure:
        ++out.uncorrectable;
        continue;
    }
    ++out.successes;
    if (*decoded.word != codeword) ++out.miscorrected;
  }
}

}  // namespace

RateMetrics simulate_transmission(const LinearCode& code, double rate, std::uint64_t trials,
                                  std::uint64_t seed, std::uint64_t rate_index,
                                  unsigned threads) {
  if (trials == 0) throw std::invalid_argument("at least one transmission is required");
  if (!(rate >= 0.0 && rate <= 1.0)) throw std::invalid_argument("error rate must lie in [0, 1]");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));

  std::vector<RateMetrics> parts(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = trials * w / workers, end = trials * (w + 1) / workers;
      auto job = [&, w, begin, end] { run_trials(code, rate, seed, rate_index, begin, end, parts[w]); };
      if (w + 1 == workers) {
        job();
      } else {
        pool.emplace_back(job);
      }
    }
  }
  RateMetrics total;
  total.rate = rate;
  for (const auto& p : parts) {
    total.trials += p.trials;
    total.successes += p.successes;
    total.clean += p.clean;
    total.corrected += p.corrected;
    total.uncorrectable += p.uncorrectable;
    total.miscorrected += p.miscorrected;
    total.total_errors += p.total_errors;
  }
  return total;
}

void SimConfig::validate() const {
  if (num_transmissions == 0) throw std::invalid_argument("num_transmissions must be at least 1");
  for (double r : error_rates) {
    if (!(r >= 0.0 && r <= 1.0)) {
      throw std::invalid_argument(fmt::format("error rate {} outside [0, 1]", r));
    }
  }
}

SimResult run_simulation(const LinearCode& code, const SimConfig& config, std::string provenance) {
  config.validate();
  SimResult result;
  result.code = code.name();
  result.n = code.length();
  result.k = code.dimension();
  result.d = min_distance_bruteforce(code, config.distance_budget, config.threads).d;
  result.seed = config.master_seed;
  result.provenance = std::move(provenance);
  for (std::size_t i = 0; i < config.error_rates.size(); ++i) {
    result.rates.push_back(simulate_transmission(code, config.error_rates[i],
                                                 config.num_transmissions, config.master_seed, i,
                                                 config.threads));
  }
  return result;
}

std::vector<PresetCode> sweep_presets() {
  struct Entry {
    CurveSpec spec;
    std::int64_t r;
  };
  const Entry entries[] = {{CurveSpec::hermitian(2), 3},
                           {CurveSpec::superelliptic(3, 3), 4},
                           {CurveSpec::superelliptic(5, 2), 4}};
  std::vector<PresetCode> out;
  for (const auto& e : entries) {
    const Curve curve(e.spec);
    out.push_back({build_onepoint_code(curve, e.r),
                   fmt::format("substitute: {} r={}", e.spec.describe(), e.r)});
  }
  return out;
}

namespace {

std::string d_column(const SimResult& r) { return r.d ? std::to_string(*r.d) : ""; }

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_simulation_csv(std::ostream& out, const std::vector<SimResult>& blocks) {
  out << "code,n,k,d,rate,trials,success_rate,uncorrectable_rate,avg_errors,seed\n";
  for (const auto& b : blocks) {
    for (const auto& m : b.rates) {
      out << fmt::format("{},{},{},{},{},{},{},{},{},{}\n", quoted(b.code), b.n, b.k, d_column(b), m.rate,
                         m.trials, m.success_rate(), m.uncorrectable_rate(), m.avg_errors(),
                         b.seed);
    }
  }
}

void write_performance_series(std::ostream& out, const std::vector<SimResult>& blocks) {
  out << "code,error_rate,decode_success_rate,detected_uncorrectable_rate\n";
  for (const auto& b : blocks) {
    for (const auto& m : b.rates) {
      out << fmt::format("{},{},{},{}\n", quoted(b.code), m.rate, m.success_rate(), m.uncorrectable_rate());
    }
  }
}

void write_error_series(std::ostream& out, const std::vector<SimResult>& blocks) {
  out << "code,error_rate,avg_errors\n";
  for (const auto& b : blocks) {
    for (const auto& m : b.rates) out << fmt::format("{},{},{}\n", quoted(b.code), m.rate, m.avg_errors());
  }
}

void to_json(nlohmann::json& j, const RateMetrics& m) {
  j = nlohmann::json{{"rate", m.rate},
                     {"trials", m.trials},
                     {"success_rate", m.success_rate()},
                     {"uncorrectable_rate", m.uncorrectable_rate()},
                     {"avg_errors", m.avg_errors()},
                     {"clean", m.clean},
                     {"corrected", m.corrected},
                     {"uncorrectable", m.uncorrectable},
                     {"miscorrected", m.miscorrected}};
}

void to_json(nlohmann::json& j, const SimResult& r) {
  j = nlohmann::json{{"code", r.code}, {"n", r.n},       {"k", r.k},
                     {"seed", r.seed}, {"rates", r.rates}, {"provenance", r.provenance}};
  j["d"] = r.d ? nlohmann::json(*r.d) : nlohmann::json();
}

}  // namespace agq
