// Copyright 2026 The sgseq Authors
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

#include <numbers>

#include <benchmark/benchmark.h>

#include "sgseq/calibration.hpp"
#include "sgseq/experiments.hpp"
#include "sgseq/sampling.hpp"
#include "sgseq/simulator.hpp"

using namespace sgseq;

namespace {

ParamSet ground_params() {
    const double q = std::numbers::pi / 4;
    return ParamSet::from_flat(3, 3, std::vector<double>{q, 3 * q, 3 * q, 3 * q, 3 * q, 5 * q});
}

void BM_calibration_cost(benchmark::State &state) {
    const auto p = ground_params();
    for (auto _ : state) {
        benchmark::DoNotOptimize(calibration_cost(p));
    }
}
BENCHMARK(BM_calibration_cost);

void BM_calibration_single_restart(benchmark::State &state) {
    CalibrationOptions opt;
    opt.restarts = 1;
    opt.threads = 1;
    for (auto _ : state) {
        opt.seed++;
        benchmark::DoNotOptimize(minimize(opt).best_cost);
    }
}
BENCHMARK(BM_calibration_single_restart)->Unit(benchmark::kMillisecond);

void BM_sequential_analytic(benchmark::State &state) {
    ExperimentConfig c;
    c.params = ground_params();
    const auto plan = plan_sequential(c, make_cross_layout(3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(analytic_distribution(plan.initial, plan.circuit));
    }
}
BENCHMARK(BM_sequential_analytic)->Unit(benchmark::kMicrosecond);

void BM_delayed_midcircuit_analytic(benchmark::State &state) {
    ExperimentConfig c;
    c.params = ground_params();
    const auto plan =
        plan_delayed_choice(c, make_cross_layout(3), DelayedMode::MidCircuit, 0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(analytic_distribution(plan.initial, plan.circuit));
    }
}
BENCHMARK(BM_delayed_midcircuit_analytic)->Unit(benchmark::kMicrosecond);

void BM_sample_distribution(benchmark::State &state) {
    ExperimentConfig c;
    const auto plan = plan_sequential(c, make_cross_layout(3));
    const auto dist = analytic_distribution(plan.initial, plan.circuit);
    Rng rng(0);
    const auto shots = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_distribution(dist, 13, shots, rng).shots());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_sample_distribution)->Arg(8192)->Arg(1 << 16)->Unit(benchmark::kMicrosecond);

void BM_run_wigner(benchmark::State &state) {
    ExperimentConfig c;
    c.params = ground_params();
    const auto layout = make_cross_layout(3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_wigner(c, layout).sampled.total);
    }
}
BENCHMARK(BM_run_wigner)->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
