// Copyright 2026 The mzsim Authors
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

// OpenMP kernels against their serial references.

#include <numbers>
#include <vector>

#include "benchmark/benchmark.h"
#include "mzsim/analysis.hpp"

using namespace mzsim;

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = a + (b - a) * i / (n - 1);
    }
    return v;
}

template <bool Parallel>
void BM_sweep(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const auto betas = linspace(0.0, 1.0, n);
    const auto deltas = linspace(-std::numbers::pi, std::numbers::pi, n);
    for (auto _ : state) {
        auto rows = Parallel ? sweep(betas, deltas, 0.0, SweepSource::Pipeline)
                             : sweep_serial(betas, deltas, 0.0, SweepSource::Pipeline);
        benchmark::DoNotOptimize(rows.data());
    }
    state.SetItemsProcessed(state.iterations() * n * n);
}

template <bool Parallel>
void BM_monte_carlo(benchmark::State &state) {
    const OutcomeDistribution ev{0.25, 0.25, 0.5, 0.0};
    const auto shots = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        McResult r = Parallel ? monte_carlo(ev, shots, 42) : monte_carlo_serial(ev, shots, 42);
        benchmark::DoNotOptimize(r.counts);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_sweep<false>)->Arg(51)->Arg(201);
BENCHMARK(BM_sweep<true>)->Arg(51)->Arg(201);
BENCHMARK(BM_monte_carlo<false>)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_monte_carlo<true>)->Arg(100000)->Arg(1000000);

BENCHMARK_MAIN();
