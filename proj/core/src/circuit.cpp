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

#include "sgseq/circuit.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

namespace sgseq {

namespace {

constexpr std::array<std::pair<QubitRole, std::string_view>, 5> kRoleNames{{
    {QubitRole::Unassigned, "unassigned"},
    {QubitRole::System, "system"},
    {QubitRole::XProbe, "x_probe"},
    {QubitRole::ZProbe, "z_probe"},
    {QubitRole::Ancilla, "ancilla"},
}};

} // namespace

std::string_view to_string(QubitRole role) noexcept {
    for (const auto &[r, name] : kRoleNames) {
        if (r == role) {
            return name;
        }
    }
    return "?";
}

std::optional<QubitRole> qubit_role_from_string(std::string_view name) noexcept {
    for (const auto &[r, n] : kRoleNames) {
        if (n == name) {
            return r;
        }
    }
    return std::nullopt;
}

Circuit::Circuit(std::size_t n_qubits)
    : n_qubits_(n_qubits), roles_(n_qubits, QubitRole::Unassigned), readout_(n_qubits, false) {
    if (n_qubits == 0) {
        throw std::invalid_argument("circuit needs at least one qubit");
    }
}

void Circuit::append(const GateOp &gate) {
    validate_gate(gate, n_qubits_);
    Instruction ins{gate, std::nullopt, std::nullopt};
    if (gate.is_measurement()) {
        ins.cbit = num_cbits_++;
    }
    ops_.push_back(ins);
}

std::size_t Circuit::measure(std::size_t qubit) {
    append(GateOp::measure(qubit));
    return num_cbits_ - 1;
}

void Circuit::append_conditioned(const GateOp &gate, std::size_t cbit) {
    validate_gate(gate, n_qubits_);
    if (gate.is_measurement()) {
        throw std::invalid_argument("measurements cannot be classically conditioned");
    }
    if (cbit >= num_cbits_) {
        throw std::invalid_argument("condition references classical bit " +
                                    std::to_string(cbit) + " before it is measured");
    }
    ops_.push_back(Instruction{gate, cbit, std::nullopt});
}

void Circuit::extend(const Circuit &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw std::invalid_argument("cannot extend a " + std::to_string(n_qubits_) +
                                    "-qubit circuit with a " +
                                    std::to_string(other.n_qubits_) + "-qubit one");
    }
    const std::size_t offset = num_cbits_;
    for (Instruction ins : other.ops_) {
        if (ins.condition) {
            *ins.condition += offset;
        }
        if (ins.cbit) {
            *ins.cbit += offset;
        }
        ops_.push_back(ins);
    }
    num_cbits_ += other.num_cbits_;
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        if (other.roles_[q] != QubitRole::Unassigned) {
            roles_[q] = other.roles_[q];
        }
        if (other.readout_[q]) {
            mark_readout_rotation(q);
        }
    }
}

void Circuit::set_role(std::size_t qubit, QubitRole role) { roles_.at(qubit) = role; }

std::vector<std::size_t> Circuit::qubits_with_role(QubitRole role) const {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        if (roles_[q] == role) {
            out.push_back(q);
        }
    }
    return out;
}

void Circuit::mark_readout_rotation(std::size_t qubit) {
    if (readout_.at(qubit)) {
        throw std::logic_error("qubit " + std::to_string(qubit) +
                               " already carries a readout rotation");
    }
    readout_[qubit] = true;
}

} // namespace sgseq
