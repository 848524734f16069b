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

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sgseq/state_vector.hpp"

namespace sgseq {

/**
 * Gate kinds and their matrix conventions.
 *
 *   Hadamard        (X + Z) / sqrt(2)
 *   RotX(b)         exp(+i b X)
 *   RotZ(b)         exp(+i b Z)
 *   RotY(t)         exp(-i t Y / 2)       RotY(-pi/2)|+> = |0>
 *   ZZ(g)           exp(+i g Z(x)Z)
 *   XX(g)           exp(+i g X(x)X)
 *   CNOT            control = targets[0], target = targets[1]
 *   ControlledRotY  RotY(t) on targets[1] when targets[0] is |1>
 *   MeasureCollapse projective Z measurement of targets[0]
 */
enum class GateKind {
    Hadamard,
    RotX,
    RotZ,
    RotY,
    ZZ,
    XX,
    CNOT,
    ControlledRotY,
    MeasureCollapse,
};

[[nodiscard]] std::string_view to_string(GateKind kind) noexcept;
[[nodiscard]] std::optional<GateKind> gate_kind_from_string(std::string_view name) noexcept;

[[nodiscard]] constexpr std::size_t arity(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::ZZ:
    case GateKind::XX:
    case GateKind::CNOT:
    case GateKind::ControlledRotY:
        return 2;
    default:
        return 1;
    }
}

[[nodiscard]] constexpr bool is_parametric(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::RotX:
    case GateKind::RotZ:
    case GateKind::RotY:
    case GateKind::ZZ:
    case GateKind::XX:
    case GateKind::ControlledRotY:
        return true;
    default:
        return false;
    }
}

struct GateOp {
    GateKind kind = GateKind::Hadamard;
    std::array<std::size_t, 2> targets{};
    double parameter = 0.0;

    [[nodiscard]] std::size_t arity() const noexcept { return sgseq::arity(kind); }
    [[nodiscard]] std::span<const std::size_t> qubits() const noexcept {
        return {targets.data(), arity()};
    }
    [[nodiscard]] bool is_measurement() const noexcept {
        return kind == GateKind::MeasureCollapse;
    }

    static GateOp hadamard(std::size_t q) { return {GateKind::Hadamard, {q, 0}, 0.0}; }
    static GateOp rot_x(std::size_t q, double beta) { return {GateKind::RotX, {q, 0}, beta}; }
    static GateOp rot_z(std::size_t q, double beta) { return {GateKind::RotZ, {q, 0}, beta}; }
    static GateOp rot_y(std::size_t q, double theta) { return {GateKind::RotY, {q, 0}, theta}; }
    static GateOp zz(std::size_t a, std::size_t b, double gamma) { return {GateKind::ZZ, {a, b}, gamma}; }
    static GateOp xx(std::size_t a, std::size_t b, double gamma) { return {GateKind::XX, {a, b}, gamma}; }
    static GateOp cnot(std::size_t control, std::size_t target) {
        return {GateKind::CNOT, {control, target}, 0.0};
    }
    static GateOp controlled_rot_y(std::size_t control, std::size_t target, double theta) {
        return {GateKind::ControlledRotY, {control, target}, theta};
    }
    static GateOp measure(std::size_t q) { return {GateKind::MeasureCollapse, {q, 0}, 0.0}; }

    friend bool operator==(const GateOp &a, const GateOp &b) noexcept {
        return a.kind == b.kind && a.parameter == b.parameter &&
               std::equal(a.qubits().begin(), a.qubits().end(), b.qubits().begin());
    }
};

/// Throws std::out_of_range if a target is >= n_qubits and
/// std::invalid_argument if a two-qubit gate repeats a target.
void validate_gate(const GateOp &gate, std::size_t n_qubits);

/**
 * Local matrix of a non-measurement gate, row-major, dimension 2^arity.
 *
 * The local basis index is sum_j bit(targets[j]) << j, matching the global
 * convention that lower qubit indices are less significant.
 */
[[nodiscard]] std::vector<Complex> gate_matrix(const GateOp &gate);

} // namespace sgseq
