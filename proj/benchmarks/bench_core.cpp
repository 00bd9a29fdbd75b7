// Copyright 2026 The fbsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "fbsim/document.hpp"
#include "fbsim/oracle.hpp"

namespace {

using namespace fbsim;

void BM_Permanent(benchmark::State& state) {
  const auto n = static_cast<size_t>(state.range(0));
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> entry(-1.0, 1.0);
  std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n));
  for (auto& row : m) {
    for (auto& value : row) value = Complex{entry(rng), entry(rng)};
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(permanent(m));
  }
}
BENCHMARK(BM_Permanent)->DenseRange(2, 12, 2);

void BM_ApplyBeamsplitter(benchmark::State& state) {
  const int particles = static_cast<int>(state.range(0));
  const ModeMap bs = beamsplitter(FIFTY_FIFTY, 0, 1, 2);
  std::vector<int> counts{particles, 0};
  const State input = fock_state(counts, Statistics::Boson);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply(bs, input));
  }
}
BENCHMARK(BM_ApplyBeamsplitter)->DenseRange(1, 8, 1);

void BM_NormalOrderFermion(benchmark::State& state) {
  const auto length = static_cast<size_t>(state.range(0));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> path(0, 3);
  std::vector<Mode> factors(length);
  for (size_t i = 0; i < length; ++i) {
    factors[i] = Mode{path(rng), static_cast<int>(i % 2)};
  }
  const Monomial monomial{Complex{1.0, 0.0}, factors};
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_order(monomial, Statistics::Fermion));
  }
}
BENCHMARK(BM_NormalOrderFermion)->DenseRange(2, 8, 2);

void BM_MziSweep64(benchmark::State& state) {
  const CircuitDocument doc = parse_document(
      "stats boson\npaths 2\nbs 0 1\nphase 1 $phi\nbs 0 1\n"
      "input fock 1 1\nsweep phi 0 6.2832 64\n");
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_document(doc));
  }
}
BENCHMARK(BM_MziSweep64);

}  // namespace

BENCHMARK_MAIN();
