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

#include "spinwig/gadget.hpp"
#include "spinwig/kernel_constructors.hpp"
#include "spinwig/mitigation.hpp"
#include "spinwig/wigner.hpp"

using namespace spinwig;

static void BM_LocalDepolarizing(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto model = local_depolarizing(std::vector<int>(n, 2), std::vector<double>(n, 0.1));
    auto rho = random_density(1 << n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(apply_channel(rho, model));
}
BENCHMARK(BM_LocalDepolarizing)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

static void BM_ExchangeChannel(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    auto model = exchange_noise(d, d, wrapped_gaussian(0.3));
    auto rho = random_density(model.dim, 3);
    for (auto _ : state) benchmark::DoNotOptimize(apply_channel(rho, model));
}
BENCHMARK(BM_ExchangeChannel)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

static void BM_ChannelAsConvolution(benchmark::State& state) {
    auto k = dephasing_kernel();
    auto model = dephasing_noise(wrapped_gaussian(0.3));
    auto rho = random_density(2, 4);
    for (auto _ : state) benchmark::DoNotOptimize(channel_as_convolution(k, model, rho));
}
BENCHMARK(BM_ChannelAsConvolution)->Unit(benchmark::kMillisecond);

static void BM_MitigateExchange(benchmark::State& state) {
    auto model = exchange_noise(2, 2, wrapped_gaussian(0.25));
    auto profile = attenuation_profile(model);
    auto rho = random_density(model.dim, 5);
    auto noisy = apply_channel(rho, model);
    ComplexMatrix obs = rho.matrix();
    for (auto _ : state) benchmark::DoNotOptimize(mitigate_observable(obs, noisy.matrix(), profile));
}
BENCHMARK(BM_MitigateExchange)->Unit(benchmark::kMicrosecond);

static void BM_WeakEntanglingGadget(benchmark::State& state) {
    auto g = gadget_extend(random_density(8, 6), ComplexMatrix::Identity(8, 8));
    auto model = weak_entangling_noise(3, wrapped_gaussian(0.05, 8), wrapped_gaussian(0.05, 8), delta_distribution(0.2));
    for (auto _ : state) benchmark::DoNotOptimize(weak_entangling_channel(g, model));
}
BENCHMARK(BM_WeakEntanglingGadget)->Unit(benchmark::kMillisecond);
