// Copyright 2026 The spinwig Authors
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

#include "spinwig/harmonics.hpp"
#include "spinwig/kernel_constructors.hpp"
#include "spinwig/sw_verifier.hpp"
#include "spinwig/wigner.hpp"

using namespace spinwig;

static void BM_BuildHarmonics(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    auto grid = make_grid_for_degree(p, 8);
    for (auto _ : state) benchmark::DoNotOptimize(build_harmonics(grid, 4));
    state.counters["nodes"] = static_cast<double>(grid.size());
}
BENCHMARK(BM_BuildHarmonics)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_ParityKernel(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(displaced_parity_kernel(dim));
}
BENCHMARK(BM_ParityKernel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_ExchangeKernel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(exchange_kernel(1, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ExchangeKernel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_VerifySW(benchmark::State& state) {
    auto k = displaced_parity_kernel(static_cast<int>(state.range(0)));
    SWOptions opt;
    opt.rotation_probes = 0;
    for (auto _ : state) benchmark::DoNotOptimize(verify_sw(*k, opt));
}
BENCHMARK(BM_VerifySW)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_WignerRoundTrip(benchmark::State& state) {
    auto k = zz_kernel();
    certify_kernel(*k);
    auto rho = random_density(4, 1);
    for (auto _ : state) benchmark::DoNotOptimize(reconstruct(wigner(rho, k)));
    state.counters["nodes"] = static_cast<double>(k->node_count());
}
BENCHMARK(BM_WignerRoundTrip)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
