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

/**
 * @file
 * Dense statevector over n qubits.
 *
 * Bit-order convention used throughout sgseq: qubit 0 is the least
 * significant bit of an amplitude index. Bitstrings are rendered most
 * significant qubit first, so the leftmost character is qubit n-1.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sgseq {

using Complex = std::complex<double>;

/// Largest register the dense backend will allocate.
inline constexpr std::size_t kMaxQubits = 24;

class StateVector {
  public:
    /// |0...0> on `n_qubits` qubits.
    explicit StateVector(std::size_t n_qubits);

    /// Takes ownership of `amplitudes`; the length must be a power of two.
    /// The amplitudes are not renormalized.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    static StateVector basis_state(std::size_t n_qubits, std::uint64_t index);

    /// All qubits in |0> except `qubit`, which holds a|0> + b|1>.
    static StateVector with_qubit(std::size_t n_qubits, std::size_t qubit,
                                  Complex a, Complex b);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }

    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }

    Complex &operator[](std::size_t i) noexcept { return amps_[i]; }
    const Complex &operator[](std::size_t i) const noexcept { return amps_[i]; }

    [[nodiscard]] double norm_squared() const noexcept;

    /// Rescales to unit norm. Throws std::domain_error on the zero vector.
    void normalize();

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    StateVector(std::size_t n_qubits, std::vector<Complex> amps);

    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

/// |<a|b>|^2. Throws std::invalid_argument on a qubit-count mismatch.
[[nodiscard]] double fidelity(const StateVector &a, const StateVector &b);

/// <a|b>.
[[nodiscard]] Complex inner_product(const StateVector &a, const StateVector &b);

/// Renders `index` as an n-character bitstring, qubit n-1 first.
[[nodiscard]] std::string to_bitstring(std::uint64_t index, std::size_t n_qubits);

/// Inverse of to_bitstring. Throws std::invalid_argument on characters
/// other than '0'/'1'.
[[nodiscard]] std::uint64_t from_bitstring(std::string_view bits);

/// The convention recorded alongside every serialized histogram.
[[nodiscard]] std::string_view bit_order_description() noexcept;

} // namespace sgseq
