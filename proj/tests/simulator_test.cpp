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

#include "sgseq/simulator.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace sgseq;
using namespace sgseq::testing;

TEST(Simulator, each_gate_matches_textbook_operator) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 4;
        auto state = random_state(n, rng);
        const auto g = random_gate(n, rng);
        const std::vector<Complex> before(state.amplitudes().begin(), state.amplitudes().end());
        apply_gate(state, g);
        const auto expected = mat_apply(reference_operator(g, n), before);
        ASSERT_LT(max_abs_diff(state.amplitudes(), expected), 1e-13)
            << to_string(g.kind) << " on " << n << " qubits";
    }
}

TEST(Simulator, gates_on_high_qubits_of_a_wide_register) {
    // 13 qubits: compare with a two-qubit reference acting on the selected pair.
    std::mt19937_64 rng(9);
    auto state = random_state(13, rng);
    const auto before = state;
    apply_gate(state, GateOp::xx(12, 3, 0.37));
    const auto m = exp_i(kron(pauli_x(), pauli_x()), 0.37);
    double worst = 0.0;
    for (std::size_t i = 0; i < state.size(); ++i) {
        const std::size_t b3 = (i >> 3) & 1;
        const std::size_t b12 = (i >> 12) & 1;
        const std::size_t row = b3 + 2 * b12;
        Complex acc = 0.0;
        for (std::size_t col = 0; col < 4; ++col) {
            std::size_t j = i & ~((std::size_t{1} << 3) | (std::size_t{1} << 12));
            j |= (col & 1) << 3;
            j |= ((col >> 1) & 1) << 12;
            acc += m[row][col] * before[j];
        }
        worst = std::max(worst, std::abs(acc - state[i]));
    }
    ASSERT_LT(worst, 1e-13);
}

TEST(Simulator, apply_gate_rejects_measurement_and_bad_targets) {
    StateVector s(2);
    ASSERT_THROW(apply_gate(s, GateOp::measure(0)), std::invalid_argument);
    ASSERT_THROW(apply_gate(s, GateOp::hadamard(2)), std::out_of_range);
}

TEST(Simulator, born_probabilities_marginalize) {
    auto s = StateVector::from_amplitudes({0.5, 0.5, 0.5, Complex(0.0, 0.5)});
    std::vector<std::size_t> q1{1};
    auto t = born_probabilities(s, q1);
    ASSERT_NEAR(t[0], 0.5, 1e-15);
    ASSERT_NEAR(t[1], 0.5, 1e-15);
    auto s2 = StateVector::from_amplitudes({0.6, 0.0, 0.0, 0.8});
    std::vector<std::size_t> both{1, 0};
    auto t2 = born_probabilities(s2, both);
    ASSERT_NEAR(t2[0b00], 0.36, 1e-15);
    ASSERT_NEAR(t2[0b11], 0.64, 1e-15);
    ASSERT_NEAR(probability_one(s2, 0), 0.64, 1e-15);
    const auto all = basis_probabilities(s2);
    ASSERT_NEAR(std::accumulate(all.begin(), all.end(), 0.0), 1.0, 1e-15);
}

TEST(Simulator, projection_and_collapse) {
    auto s = StateVector::from_amplitudes({0.6, 0.0, 0.0, 0.8});
    auto copy = s;
    ASSERT_NEAR(project(copy, 1, 1), 0.64, 1e-15);
    ASSERT_NEAR(std::abs(copy[3]), 1.0, 1e-15);
    ASSERT_NEAR(copy.norm_squared(), 1.0, 1e-15);

    Rng rng(1);
    int ones = 0;
    for (int k = 0; k < 2000; ++k) {
        auto t = s;
        const int bit = measure_and_collapse(t, 0, rng);
        ones += bit;
        ASSERT_NEAR(probability_one(t, 1), bit, 1e-15) << "collapse must correlate qubit 1";
    }
    // 4 sigma around 0.64 with n = 2000.
    ASSERT_NEAR(ones / 2000.0, 0.64, 4 * std::sqrt(0.64 * 0.36 / 2000));
}

TEST(Simulator, ising_energy_of_ghz_is_ground) {
    for (std::size_t n : {2u, 4u, 7u}) {
        Circuit c(n);
        c.append(GateOp::hadamard(0));
        for (std::size_t q = 0; q + 1 < n; ++q) {
            c.append(GateOp::cnot(q, q + 1));
        }
        StateVector s(n);
        Rng rng(0);
        apply_circuit(s, c, rng);
        std::vector<Bond> bonds;
        for (std::size_t q = 0; q + 1 < n; ++q) {
            bonds.push_back({q, q + 1});
        }
        ASSERT_NEAR(expectation_pauli_chain(s, PauliAxis::Z, bonds), -double(n - 1), 1e-12);
        ASSERT_NEAR(expectation_pauli_chain(s, PauliAxis::X, bonds), n == 2 ? -1.0 : 0.0, 1e-12);
    }
}

TEST(Simulator, ising_energy_matches_dense_expectation) {
    std::mt19937_64 rng(3);
    const std::size_t n = 4;
    std::vector<Bond> bonds{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    for (int trial = 0; trial < 20; ++trial) {
        auto s = random_state(n, rng);
        const std::vector<Complex> v(s.amplitudes().begin(), s.amplitudes().end());
        for (auto axis : {PauliAxis::Z, PauliAxis::X}) {
            const Mat p = axis == PauliAxis::Z ? pauli_z() : pauli_x();
            double expected = 0.0;
            for (const auto &b : bonds) {
                const auto hv = mat_apply(matmul(on_qubit(p, b.a, n), on_qubit(p, b.b, n)), v);
                Complex acc = 0.0;
                for (std::size_t k = 0; k < v.size(); ++k) {
                    acc += std::conj(v[k]) * hv[k];
                }
                expected -= acc.real();
            }
            ASSERT_NEAR(expectation_pauli_chain(s, axis, bonds), expected, 1e-12);
        }
    }
}

TEST(Simulator, conditioned_gate_fires_on_measured_one) {
    Circuit c(2);
    c.append(GateOp::hadamard(0));
    const auto bit = c.measure(0);
    c.append_conditioned(GateOp::cnot(0, 1), bit);
    Rng rng(42);
    for (int k = 0; k < 50; ++k) {
        StateVector s(2);
        const auto record = apply_circuit(s, c, rng);
        ASSERT_EQ(record.size(), 1u);
        const std::size_t expected = record[0] ? 0b11 : 0b00;
        ASSERT_NEAR(std::abs(s[expected]), 1.0, 1e-15);
    }
}

TEST(Simulator, branches_cover_all_histories) {
    Circuit c(3);
    c.append(GateOp::rot_y(0, 2 * std::asin(std::sqrt(0.3))));
    c.append(GateOp::hadamard(1));
    c.measure(0);
    c.measure(1);
    c.append_conditioned(GateOp::rot_y(2, kPi), 0);
    const auto branches = enumerate_branches(StateVector(3), c);
    ASSERT_EQ(branches.size(), 4u);
    double total = 0.0;
    for (const auto &b : branches) {
        total += b.probability;
        const double p0 = b.outcomes[0] ? 0.3 : 0.7;
        ASSERT_NEAR(b.probability, p0 * 0.5, 1e-14);
        ASSERT_NEAR(probability_one(b.state, 2), b.outcomes[0], 1e-14);
        ASSERT_NEAR(b.state.norm_squared(), 1.0, 1e-14);
    }
    ASSERT_NEAR(total, 1.0, 1e-14);

    const auto dist = analytic_distribution(StateVector(3), c);
    ASSERT_NEAR(dist[0b101], 0.15, 1e-14);
    ASSERT_NEAR(dist[0b010], 0.35, 1e-14);
    ASSERT_NEAR(dist[0b111], 0.15, 1e-14);
    ASSERT_NEAR(dist[0b110], 0.0, 1e-14);
    ASSERT_NEAR(dist[0b000], 0.35, 1e-14);
}

TEST(Simulator, zero_probability_branches_are_pruned) {
    Circuit c(1);
    c.measure(0);
    const auto branches = enumerate_branches(StateVector(1), c);
    ASSERT_EQ(branches.size(), 1u);
    ASSERT_EQ(branches[0].outcomes[0], 0);
}

TEST(Simulator, unitary_circuit_distribution_is_born_rule) {
    std::mt19937_64 rng(17);
    Circuit c(3);
    for (int k = 0; k < 12; ++k) {
        c.append(random_gate(3, rng));
    }
    const auto initial = random_state(3, rng);
    auto s = initial;
    Rng r(0);
    apply_circuit(s, c, r);
    const auto born = basis_probabilities(s);
    const auto dist = analytic_distribution(initial, c);
    for (std::size_t k = 0; k < born.size(); ++k) {
        ASSERT_NEAR(dist[k], born[k], 1e-14);
    }
}
