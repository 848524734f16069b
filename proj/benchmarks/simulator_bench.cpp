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

#include <random>

#include <benchmark/benchmark.h>

#include "sgseq/simulator.hpp"

using namespace sgseq;

namespace {

StateVector random_state(std::size_t n) {
    std::mt19937_64 rng(1);
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << n);
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
    }
    auto s = StateVector::from_amplitudes(std::move(amps));
    s.normalize();
    return s;
}

void BM_apply_gate(benchmark::State &state, GateOp gate) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto s = random_state(n);
    for (auto _ : state) {
        apply_gate(s, gate);
        benchmark::DoNotOptimize(s.amplitudes().data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.size()));
}

BENCHMARK_CAPTURE(BM_apply_gate, hadamard, GateOp::hadamard(5))->Arg(13)->Arg(14);
BENCHMARK_CAPTURE(BM_apply_gate, rot_x, GateOp::rot_x(5, 0.3))->Arg(13)->Arg(14);
BENCHMARK_CAPTURE(BM_apply_gate, rot_y, GateOp::rot_y(12, -1.57))->Arg(13)->Arg(14);
BENCHMARK_CAPTURE(BM_apply_gate, zz, GateOp::zz(2, 3, 0.7))->Arg(13)->Arg(14);
BENCHMARK_CAPTURE(BM_apply_gate, xx, GateOp::xx(9, 3, 0.7))->Arg(13)->Arg(14);
BENCHMARK_CAPTURE(BM_apply_gate, cnot, GateOp::cnot(3, 10))->Arg(13)->Arg(14);
BENCHMARK_CAPTURE(BM_apply_gate, controlled_rot_y, GateOp::controlled_rot_y(13, 7, -1.57))
    ->Arg(14);

void BM_ising_energy(benchmark::State &state) {
    auto s = random_state(13);
    std::vector<Bond> bonds;
    for (std::size_t q = 0; q + 1 < 7; ++q) {
        bonds.push_back({q, q + 1});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(expectation_pauli_chain(s, PauliAxis::Z, bonds));
    }
}
BENCHMARK(BM_ising_energy);

} // namespace
