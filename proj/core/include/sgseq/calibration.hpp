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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sgseq/ansatz.hpp"
#include "sgseq/state_vector.hpp"

namespace sgseq {

/// Lowest eigenvalue of the open ferromagnetic chain on 2N+1 sites.
[[nodiscard]] constexpr double ground_energy(std::size_t N) noexcept {
    return -2.0 * static_cast<double>(N);
}

/// Output of a standalone (2N+1)-qubit S-G device, system qubit at index N,
/// for system input a|0> + b|1> (Z basis) or a|+> + b|-> (X basis).
[[nodiscard]] StateVector device_output(const ParamSet &params, Complex a, Complex b,
                                        Basis basis = Basis::Z);

/// Calibration objective: Ising energy of the device output for system input
/// |0> (Z basis, ZZ bonds) or |+> (X basis, XX bonds) over all 2N chain bonds.
[[nodiscard]] double calibration_cost(const ParamSet &params, Basis basis = Basis::Z);

/// a|0>|0...0> + b|1>|1...1> on 2N+1 qubits (system qubit at index N).
[[nodiscard]] StateVector cat_target(std::size_t N, Complex a, Complex b);

/// Overlap of the Z device output with cat_target. Throws
/// std::invalid_argument unless |a|^2 + |b|^2 = 1 within 1e-12.
[[nodiscard]] double cat_fidelity(const ParamSet &params, Complex a, Complex b);

struct CalibrationOptions {
    std::size_t N = 3;
    std::size_t m = 3;
    std::size_t restarts = 20;
    std::uint64_t seed = 0;
    double tolerance = 1e-6;
    std::size_t max_iters = 2000;
    Basis basis = Basis::Z;
    /// 0 means worker_threads().
    std::size_t threads = 0;
};

struct TracePoint {
    std::size_t restart = 0;
    std::size_t iteration = 0;
    double cost = 0.0;
    friend bool operator==(const TracePoint &, const TracePoint &) = default;
};

struct CalibrationReport {
    ParamSet best_params;
    double best_cost = 0.0;
    double ground_energy = 0.0;
    std::vector<TracePoint> cost_trace;
    std::vector<double> restart_costs;
    std::size_t restarts = 0;
    std::uint64_t seed = 0;
    std::size_t evaluations = 0;
    double tolerance = 0.0;
    std::size_t max_iters = 0;
    Basis basis = Basis::Z;
    double cat_fidelity_0 = 0.0;
    double cat_fidelity_plus = 0.0;

    /// Cost threshold at `fraction` of the ground energy.
    [[nodiscard]] double threshold(double fraction = 0.9) const {
        return fraction * ground_energy;
    }
    [[nodiscard]] bool accepted(double fraction = 0.9) const {
        return best_cost <= threshold(fraction);
    }
    /// Empty when accepted; otherwise suggests one more layer.
    [[nodiscard]] std::string recommendation(double fraction = 0.9) const;

    friend bool operator==(const CalibrationReport &, const CalibrationReport &) = default;
};

/**
 * Multi-start Nelder-Mead minimization of calibration_cost. Restart r starts
 * from angles drawn uniformly in [0, pi) by a generator seeded with
 * derive_seed(seed, r); the report is identical for any thread count.
 */
[[nodiscard]] CalibrationReport minimize(const CalibrationOptions &options);

} // namespace sgseq
