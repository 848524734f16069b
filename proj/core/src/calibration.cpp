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

#include "sgseq/calibration.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sgseq/layout.hpp"
#include "sgseq/nelder_mead.hpp"
#include "sgseq/parallel.hpp"
#include "sgseq/random.hpp"
#include "sgseq/simulator.hpp"

namespace sgseq {

namespace {

std::vector<std::size_t> standalone_chain(std::size_t N) {
    std::vector<std::size_t> chain(2 * N + 1);
    for (std::size_t i = 0; i < chain.size(); ++i) {
        chain[i] = i;
    }
    return chain;
}

void check_normalized(Complex a, Complex b) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
        throw std::invalid_argument("input amplitudes must satisfy |a|^2 + |b|^2 = 1");
    }
}

} // namespace

StateVector device_output(const ParamSet &params, Complex a, Complex b, Basis basis) {
    params.validate();
    const auto chain = standalone_chain(params.N);
    const std::size_t n = chain.size();
    const std::size_t center = params.N;
    StateVector state = StateVector::with_qubit(n, center, a, b);
    if (basis == Basis::X) {
        // a|+> + b|-> on the system qubit.
        apply_gate(state, GateOp::hadamard(center));
    }
    Circuit circuit(n);
    append_sg(circuit, basis, params, chain);
    for (const auto &ins : circuit.ops()) {
        apply_gate(state, ins.gate);
    }
    return state;
}

double calibration_cost(const ParamSet &params, Basis basis) {
    const auto state = device_output(params, 1.0, 0.0, basis);
    const auto bonds = chain_bonds(standalone_chain(params.N));
    return expectation_pauli_chain(state, basis == Basis::Z ? PauliAxis::Z : PauliAxis::X, bonds);
}

StateVector cat_target(std::size_t N, Complex a, Complex b) {
    const std::size_t n = 2 * N + 1;
    StateVector s(n);
    s[0] = a;
    s[(std::size_t{1} << n) - 1] = b;
    return s;
}

double cat_fidelity(const ParamSet &params, Complex a, Complex b) {
    check_normalized(a, b);
    return fidelity(cat_target(params.N, a, b), device_output(params, a, b, Basis::Z));
}

std::string CalibrationReport::recommendation(double fraction) const {
    if (accepted(fraction)) {
        return {};
    }
    return "best cost " + std::to_string(best_cost) + " is above the acceptance threshold " +
           std::to_string(threshold(fraction)) + "; retry with --layers " +
           std::to_string(best_params.m + 1);
}

CalibrationReport minimize(const CalibrationOptions &options) {
    if (options.restarts == 0) {
        throw std::invalid_argument("calibration needs at least one restart");
    }
    if (options.N == 0 || options.m == 0) {
        throw std::invalid_argument("calibration needs N >= 1 and m >= 1");
    }

    struct RestartResult {
        NelderMeadResult nm;
        std::vector<TracePoint> trace;
    };
    std::vector<RestartResult> runs(options.restarts);

    const NelderMeadOptions nm_options{options.tolerance, options.max_iters, 0.5};
    const std::size_t threads = options.threads ? options.threads : worker_threads();
    parallel_for(options.restarts, threads, [&](std::size_t r) {
        Rng rng(derive_seed(options.seed, r));
        std::vector<double> x0(2 * options.m);
        for (double &v : x0) {
            v = uniform01(rng) * std::numbers::pi;
        }
        auto objective = [&](std::span<const double> x) {
            return calibration_cost(ParamSet::from_flat(options.N, options.m, x), options.basis);
        };
        auto &run = runs[r];
        run.trace.push_back({r, 0, objective(x0)});
        run.nm = nelder_mead(objective, x0, nm_options, [&](std::size_t it, double best) {
            run.trace.push_back({r, it, best});
        });
    });

    CalibrationReport report;
    report.ground_energy = ground_energy(options.N);
    report.restarts = options.restarts;
    report.seed = options.seed;
    report.tolerance = options.tolerance;
    report.max_iters = options.max_iters;
    report.basis = options.basis;
    std::size_t best = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        report.restart_costs.push_back(runs[r].nm.value);
        report.evaluations += runs[r].nm.evaluations + 1;
        report.cost_trace.insert(report.cost_trace.end(), runs[r].trace.begin(),
                                 runs[r].trace.end());
        if (runs[r].nm.value < runs[best].nm.value) {
            best = r;
        }
    }
    report.best_params = ParamSet::from_flat(options.N, options.m, runs[best].nm.x);
    report.best_cost = runs[best].nm.value;
    const double r = 1.0 / std::sqrt(2.0);
    report.cat_fidelity_0 = cat_fidelity(report.best_params, 1.0, 0.0);
    report.cat_fidelity_plus = cat_fidelity(report.best_params, r, r);
    return report;
}

} // namespace sgseq
