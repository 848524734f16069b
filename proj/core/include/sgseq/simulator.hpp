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
#include <span>
#include <vector>

#include "sgseq/circuit.hpp"
#include "sgseq/random.hpp"
#include "sgseq/state_vector.hpp"

namespace sgseq {

/// Applies a unitary gate in place. Throws on measurement gates and on
/// invalid targets (see validate_gate).
void apply_gate(StateVector &state, const GateOp &gate);

/// Runs `circuit` in program order. Measurements sample from `rng` and
/// collapse the state; conditioned gates fire when their bit reads 1.
/// Returns the classical record, one entry per cbit.
std::vector<std::uint8_t> apply_circuit(StateVector &state, const Circuit &circuit, Rng &rng);

/// Marginal distribution over an ordered qubit subset. Entry `k` is the
/// probability that subset[j] reads bit j of k for every j.
struct ProbabilityTable {
    std::vector<std::size_t> qubits;
    std::vector<double> probabilities;

    [[nodiscard]] double operator[](std::size_t pattern) const { return probabilities.at(pattern); }
};

[[nodiscard]] ProbabilityTable born_probabilities(const StateVector &state,
                                                  std::span<const std::size_t> qubits);

/// Full-register Born distribution, |amplitude|^2 per basis index.
[[nodiscard]] std::vector<double> basis_probabilities(const StateVector &state);

/// Probability that `qubit` reads 1.
[[nodiscard]] double probability_one(const StateVector &state, std::size_t qubit);

/// Samples a Z measurement of `qubit`, zeroes the other branch and
/// renormalizes. Throws std::logic_error if the sampled branch has zero
/// weight.
int measure_and_collapse(StateVector &state, std::size_t qubit, Rng &rng);

/// Forces `qubit` to `outcome`; returns the branch probability it had.
/// Leaves the state untouched when that probability is zero.
double project(StateVector &state, std::size_t qubit, int outcome);

enum class PauliAxis { Z, X };

struct Bond {
    std::size_t a = 0;
    std::size_t b = 0;

    friend auto operator<=>(const Bond &, const Bond &) = default;
};

/// Ising energy -sum_{(a,b) in bonds} <P_a P_b> for P the chosen axis.
[[nodiscard]] double expectation_pauli_chain(const StateVector &state, PauliAxis axis,
                                             std::span<const Bond> bonds);

/// One measurement history of a circuit together with its terminal state.
struct Branch {
    std::vector<std::uint8_t> outcomes;
    double probability = 0.0;
    StateVector state;
};

/// Enumerates every measurement history with probability above
/// `min_probability`, with each branch state renormalized.
[[nodiscard]] std::vector<Branch> enumerate_branches(const StateVector &initial,
                                                     const Circuit &circuit,
                                                     double min_probability = 1e-24);

/// Full-register outcome distribution after running `circuit`, averaged
/// over measurement branches.
[[nodiscard]] std::vector<double> analytic_distribution(const StateVector &initial,
                                                        const Circuit &circuit);

} // namespace sgseq
