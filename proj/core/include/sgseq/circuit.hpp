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
#include <optional>
#include <string_view>
#include <vector>

#include "sgseq/gate.hpp"

namespace sgseq {

enum class QubitRole { Unassigned, System, XProbe, ZProbe, Ancilla };

[[nodiscard]] std::string_view to_string(QubitRole role) noexcept;
[[nodiscard]] std::optional<QubitRole> qubit_role_from_string(std::string_view name) noexcept;

/// One program step. `condition` names a classical bit that must read 1 for
/// the gate to fire. Measurements write the classical bit `cbit`.
struct Instruction {
    GateOp gate;
    std::optional<std::size_t> condition;
    std::optional<std::size_t> cbit;

    friend bool operator==(const Instruction &, const Instruction &) = default;
};

/**
 * Ordered gate program over a fixed qubit count.
 *
 * Classical bits are allocated in measurement order; a conditioned gate may
 * only reference a bit written by an earlier measurement. Each qubit carries
 * exactly one role tag.
 */
class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }
    [[nodiscard]] bool empty() const noexcept { return ops_.empty(); }
    [[nodiscard]] std::size_t num_cbits() const noexcept { return num_cbits_; }
    [[nodiscard]] const std::vector<Instruction> &ops() const noexcept { return ops_; }

    /// Appends an unconditioned gate. A measurement allocates a new cbit.
    void append(const GateOp &gate);

    /// Measures `qubit` and returns the classical bit it writes.
    std::size_t measure(std::size_t qubit);

    /// Throws std::invalid_argument if `cbit` has not been written yet or
    /// `gate` is itself a measurement.
    void append_conditioned(const GateOp &gate, std::size_t cbit);

    /// Appends every instruction of `other`, renumbering its classical bits
    /// after ours. Role tags of `other` that are not Unassigned overwrite ours.
    void extend(const Circuit &other);

    [[nodiscard]] QubitRole role(std::size_t qubit) const { return roles_.at(qubit); }
    [[nodiscard]] const std::vector<QubitRole> &roles() const noexcept { return roles_; }
    void set_role(std::size_t qubit, QubitRole role);
    [[nodiscard]] std::vector<std::size_t> qubits_with_role(QubitRole role) const;

    /// Readout-rotation labels guard against attaching RotY(-pi/2) twice.
    [[nodiscard]] bool has_readout_rotation(std::size_t qubit) const {
        return readout_.at(qubit);
    }
    void mark_readout_rotation(std::size_t qubit);

    [[nodiscard]] bool has_measurements() const noexcept { return num_cbits_ > 0; }

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    std::size_t n_qubits_;
    std::size_t num_cbits_ = 0;
    std::vector<Instruction> ops_;
    std::vector<QubitRole> roles_;
    std::vector<bool> readout_;
};

} // namespace sgseq
