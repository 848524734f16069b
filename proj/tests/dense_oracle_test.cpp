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

#include "sgseq/dense_oracle.hpp"

#include <random>
#include <stdexcept>

#include "gtest/gtest.h"

#include "sgseq/simulator.hpp"
#include "test_util.hpp"

using namespace sgseq;
using namespace sgseq::testing;

TEST(DenseOracle, embedding_matches_textbook_operators) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto g = random_gate(n, rng);
        const auto got = embed_gate(g, n);
        const auto want = reference_operator(g, n);
        for (std::size_t r = 0; r < got.dim(); ++r) {
            for (std::size_t c = 0; c < got.dim(); ++c) {
                ASSERT_LT(std::abs(got(r, c) - want[r][c]), 1e-14);
            }
        }
    }
}

TEST(DenseOracle, random_circuits_match_statevector_kernels) {
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<std::size_t> width(1, 4);
    std::uniform_int_distribution<std::size_t> depth(0, 30);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = width(rng);
        Circuit c(n);
        const std::size_t gates = depth(rng);
        for (std::size_t k = 0; k < gates; ++k) {
            c.append(random_gate(n, rng));
        }
        const auto u = dense_unitary_oracle(c);
        ASSERT_LT(u.unitarity_error(), 1e-12);
        auto state = random_state(n, rng);
        const auto expected = u.apply(state.amplitudes());
        Rng unused(0);
        apply_circuit(state, c, unused);
        ASSERT_LT(max_abs_diff(state.amplitudes(), expected), 1e-12) << "trial " << trial;
    }
}

TEST(DenseOracle, product_and_adjoint) {
    Circuit c(2);
    c.append(GateOp::hadamard(0));
    c.append(GateOp::cnot(0, 1));
    const auto u = dense_unitary_oracle(c);
    const auto id = u.adjoint() * u;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t col = 0; col < 4; ++col) {
            ASSERT_NEAR(std::abs(id(r, col) - (r == col ? 1.0 : 0.0)), 0.0, 1e-15);
        }
    }
    const auto bell = u.apply(StateVector(2).amplitudes());
    ASSERT_NEAR(std::abs(bell[0]), 1 / std::sqrt(2.0), 1e-15);
    ASSERT_NEAR(std::abs(bell[3]), 1 / std::sqrt(2.0), 1e-15);
}

TEST(DenseOracle, rejects_what_it_cannot_represent) {
    ASSERT_THROW((void)dense_unitary_oracle(Circuit(kOracleMaxQubits + 1)), std::length_error);
    Circuit m(1);
    m.measure(0);
    ASSERT_THROW((void)dense_unitary_oracle(m), std::invalid_argument);
    ASSERT_THROW((void)(DenseMatrix(2) * DenseMatrix(4)), std::invalid_argument);
}
