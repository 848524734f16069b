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

#include "sgseq/gate.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sgseq {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 9> kNames{{
    {GateKind::Hadamard, "Hadamard"},
    {GateKind::RotX, "RotX"},
    {GateKind::RotZ, "RotZ"},
    {GateKind::RotY, "RotY"},
    {GateKind::ZZ, "ZZ"},
    {GateKind::XX, "XX"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::ControlledRotY, "ControlledRotY"},
    {GateKind::MeasureCollapse, "MeasureCollapse"},
}};

constexpr Complex kI{0.0, 1.0};

} // namespace

std::string_view to_string(GateKind kind) noexcept {
    for (const auto &[k, name] : kNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_string(std::string_view name) noexcept {
    for (const auto &[k, n] : kNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

void validate_gate(const GateOp &gate, std::size_t n_qubits) {
    for (std::size_t q : gate.qubits()) {
        if (q >= n_qubits) {
            throw std::out_of_range(std::string(to_string(gate.kind)) + " target " +
                                    std::to_string(q) + " out of range for " +
                                    std::to_string(n_qubits) + " qubits");
        }
    }
    if (gate.arity() == 2 && gate.targets[0] == gate.targets[1]) {
        throw std::invalid_argument(std::string(to_string(gate.kind)) +
                                    " has duplicate target " + std::to_string(gate.targets[0]));
    }
    if (!std::isfinite(gate.parameter)) {
        throw std::invalid_argument(std::string(to_string(gate.kind)) +
                                    " has a non-finite parameter");
    }
}

std::vector<Complex> gate_matrix(const GateOp &gate) {
    const double t = gate.parameter;
    const double r = 1.0 / std::sqrt(2.0);
    switch (gate.kind) {
    case GateKind::Hadamard:
        return {r, r, r, -r};
    case GateKind::RotX: // cos t I + i sin t X
        return {std::cos(t), kI * std::sin(t), kI * std::sin(t), std::cos(t)};
    case GateKind::RotZ:
        return {std::exp(kI * t), 0.0, 0.0, std::exp(-kI * t)};
    case GateKind::RotY: // cos(t/2) I - i sin(t/2) Y
        return {std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2)};
    case GateKind::ZZ: {
        const Complex p = std::exp(kI * t);
        const Complex n = std::exp(-kI * t);
        return {p, 0, 0, 0, //
                0, n, 0, 0, //
                0, 0, n, 0, //
                0, 0, 0, p};
    }
    case GateKind::XX: {
        const Complex c = std::cos(t);
        const Complex s = kI * std::sin(t);
        return {c, 0, 0, s, //
                0, c, s, 0, //
                0, s, c, 0, //
                s, 0, 0, c};
    }
    case GateKind::CNOT: // local index = control + 2 * target
        return {1, 0, 0, 0, //
                0, 0, 0, 1, //
                0, 0, 1, 0, //
                0, 1, 0, 0};
    case GateKind::ControlledRotY: {
        const double c = std::cos(t / 2);
        const double s = std::sin(t / 2);
        return {1, 0, 0, 0,  //
                0, c, 0, -s, //
                0, 0, 1, 0,  //
                0, s, 0, c};
    }
    case GateKind::MeasureCollapse:
        break;
    }
    throw std::invalid_argument("MeasureCollapse has no unitary matrix");
}

} // namespace sgseq
