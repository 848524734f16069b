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

#include "sgseq/state_vector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sgseq {

namespace {

void check_qubit_count(std::size_t n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                                    "], got " + std::to_string(n_qubits));
    }
}

} // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t len = amplitudes.size();
    if (len < 2 || !std::has_single_bit(len)) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2, got " +
                                    std::to_string(len));
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(len));
    check_qubit_count(n);
    return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::basis_state(std::size_t n_qubits, std::uint64_t index) {
    StateVector s(n_qubits);
    if (index >= s.size()) {
        throw std::out_of_range("basis index " + std::to_string(index) + " out of range");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::with_qubit(std::size_t n_qubits, std::size_t qubit, Complex a,
                                    Complex b) {
    StateVector s(n_qubits);
    if (qubit >= n_qubits) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range");
    }
    s.amps_[0] = a;
    s.amps_[std::size_t{1} << qubit] = b;
    return s;
}

double StateVector::norm_squared() const noexcept {
    double total = 0.0;
    for (const auto &c : amps_) {
        total += std::norm(c);
    }
    return total;
}

void StateVector::normalize() {
    const double n2 = norm_squared();
    if (!(n2 > 0.0)) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (auto &c : amps_) {
        c *= scale;
    }
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("inner product of states with " +
                                    std::to_string(a.n_qubits()) + " and " +
                                    std::to_string(b.n_qubits()) + " qubits");
    }
    Complex acc{0.0, 0.0};
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::norm(inner_product(a, b));
}

std::string to_bitstring(std::uint64_t index, std::size_t n_qubits) {
    std::string bits(n_qubits, '0');
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if ((index >> q) & 1U) {
            bits[n_qubits - 1 - q] = '1';
        }
    }
    return bits;
}

std::uint64_t from_bitstring(std::string_view bits) {
    if (bits.size() > 64) {
        throw std::invalid_argument("bitstring longer than 64 characters");
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bitstring contains '" + std::string(1, c) + "'");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return index;
}

std::string_view bit_order_description() noexcept {
    return "qubit 0 is the least significant bit of the basis index; bitstrings are "
           "written qubit n-1 first";
}

} // namespace sgseq
