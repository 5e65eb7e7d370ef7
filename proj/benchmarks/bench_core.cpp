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

#include <benchmark/benchmark.h>

#include "agq/simulator.hpp"

namespace agq {
namespace {

void BM_FieldMul(benchmark::State& state) {
  const auto f = Field::of_order(static_cast<std::uint32_t>(state.range(0)));
  const Symbol q = f->size();
  Symbol acc = 1;
  for (auto _ : state) {
    for (Symbol a = 1; a < q; ++a) acc = f->mul(acc, a) | 1;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (q - 1));
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(25)->Arg(256)->Arg(1 << 16);

void BM_EnumeratePoints(benchmark::State& state) {
  const Curve c(CurveSpec::superelliptic(static_cast<std::uint32_t>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(c.enumerate_points());
}
BENCHMARK(BM_EnumeratePoints)->Arg(3)->Arg(5)->Arg(7)->Arg(11);

void BM_WeightDistribution(benchmark::State& state) {
  const auto code = build_onepoint_code(Curve(CurveSpec::superelliptic(5, 3)), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(weight_distribution(code, kDefaultCodewordBudget, 1));
  state.SetItemsProcessed(state.iterations() * codeword_count(code));
}
BENCHMARK(BM_WeightDistribution)->Arg(2)->Arg(3)->Arg(4);

void BM_Decode(benchmark::State& state) {
  const auto code = build_onepoint_code(Curve(CurveSpec::hermitian(2)), 3);
  auto word = encode(code, std::vector<Symbol>{1, 2, 3});
  word[5] = word[5] ^ 1;
  for (auto _ : state) benchmark::DoNotOptimize(decode_goppa(code, word));
}
BENCHMARK(BM_Decode);

void BM_Simulate(benchmark::State& state) {
  const auto code = build_onepoint_code(Curve(CurveSpec::superelliptic(3, 3)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_transmission(code, 0.05, 1000, 1, 0, 1));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_Simulate);

}  // namespace
}  // namespace agq

BENCHMARK_MAIN();
