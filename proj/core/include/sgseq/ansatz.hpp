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
#include <span>
#include <vector>

#include "sgseq/circuit.hpp"

namespace sgseq {

/// Variational angles of the layered S-G circuit, in radians. Layer k uses
/// gamma[k] for its two-qubit couplings and beta[k] for the probe rotations.
struct ParamSet {
    std::size_t N = 3;
    std::size_t m = 3;
    std::vector<double> gamma;
    std::vector<double> beta;

    /// All-zero angles.
    static ParamSet zeros(std::size_t N, std::size_t m);

    /// Flattened [gamma..., beta...], the optimizer's coordinate order.
    static ParamSet from_flat(std::size_t N, std::size_t m, std::span<const double> flat);
    [[nodiscard]] std::vector<double> flat() const;

    /// Throws std::invalid_argument unless N >= 1, m >= 1 and both angle
    /// lists have length m with finite entries.
    void validate() const;

    friend bool operator==(const ParamSet &, const ParamSet &) = default;
};

enum class Basis { Z, X };

/// Probe qubits of a chain: every entry except the midpoint.
[[nodiscard]] std::vector<std::size_t> chain_probes(std::span<const std::size_t> chain);

/// Z-basis S-G device on `chain` (2N+1 qubits, system qubit in the middle):
/// Hadamard on each probe, then m layers of ZZ(gamma_k) along the chain
/// followed by RotX(beta_k) on each probe.
void append_sg_z(Circuit &circuit, const ParamSet &params, std::span<const std::size_t> chain);

/// X-basis S-G device: no preparation layer; XX(gamma_k) couplings and
/// RotZ(beta_k) probe rotations.
void append_sg_x(Circuit &circuit, const ParamSet &params, std::span<const std::size_t> chain);

void append_sg(Circuit &circuit, Basis basis, const ParamSet &params,
               std::span<const std::size_t> chain);

[[nodiscard]] Circuit build_sg_z(const ParamSet &params, std::span<const std::size_t> chain,
                                 std::size_t n_qubits);
[[nodiscard]] Circuit build_sg_x(const ParamSet &params, std::span<const std::size_t> chain,
                                 std::size_t n_qubits);

/// Appends RotY(-pi/2) to each probe so |+> reads 0 and |-> reads 1.
/// Throws std::logic_error if any listed probe already carries one.
void attach_readout_rotations(Circuit &circuit, std::span<const std::size_t> probes);

/**
 * Ideal cat-state device. Z basis: a CNOT ladder from the midpoint outward,
 * (a|0> + b|1>)|0...0> -> a|0>|0...0> + b|1>|1...1>. X basis: Hadamard on
 * the system qubit, the same ladder, then Hadamard on every chain qubit, so
 * (a|+> + b|->)|0...0> -> a|+>|+...+> + b|->|-...->.
 */
void append_reference_cat(Circuit &circuit, Basis basis, std::span<const std::size_t> chain);

[[nodiscard]] Circuit build_reference_cat(Basis basis, std::span<const std::size_t> chain,
                                          std::size_t n_qubits);

} // namespace sgseq
