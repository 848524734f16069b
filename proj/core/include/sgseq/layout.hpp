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
#include <set>
#include <span>
#include <vector>

#include "sgseq/circuit.hpp"
#include "sgseq/simulator.hpp"

namespace sgseq {

/// Consecutive pairs of a chain, in chain order.
[[nodiscard]] std::vector<Bond> chain_bonds(std::span<const std::size_t> chain);

/**
 * Cross-shaped device: two (2N+1)-qubit chains that share the system qubit
 * at their midpoint. The vertical arm is indices 0..2N with the system qubit
 * at N; the horizontal arm is 2N+1..3N, then N, then 3N+1..4N.
 */
class CrossLayout {
  public:
    explicit CrossLayout(std::size_t arm_half_length);

    [[nodiscard]] std::size_t arm_half_length() const noexcept { return n_; }
    [[nodiscard]] std::size_t n_qubits() const noexcept { return 4 * n_ + 1; }
    [[nodiscard]] std::size_t center() const noexcept { return n_; }

    [[nodiscard]] const std::vector<std::size_t> &vertical_chain() const noexcept { return vertical_; }
    [[nodiscard]] const std::vector<std::size_t> &horizontal_chain() const noexcept { return horizontal_; }
    [[nodiscard]] std::vector<std::size_t> vertical_probes() const;
    [[nodiscard]] std::vector<std::size_t> horizontal_probes() const;

    /// Normalized (a < b) nearest-neighbour pairs; 4N in total.
    [[nodiscard]] const std::set<Bond> &adjacency() const noexcept { return adjacency_; }
    [[nodiscard]] bool adjacent(std::size_t a, std::size_t b) const;

  private:
    std::size_t n_;
    std::vector<std::size_t> vertical_;
    std::vector<std::size_t> horizontal_;
    std::set<Bond> adjacency_;
};

/// Throws std::invalid_argument for N == 0.
[[nodiscard]] CrossLayout make_cross_layout(std::size_t arm_half_length);

struct Violation {
    std::size_t op_index = 0;
    GateOp gate;
};

struct ValidationReport {
    std::vector<Violation> violations;
    [[nodiscard]] bool legal() const noexcept { return violations.empty(); }
};

/// Lists every two-qubit gate whose pair is not adjacent on `layout`,
/// including gates touching qubits the layout does not contain.
[[nodiscard]] ValidationReport validate_nearest_neighbor(const Circuit &circuit,
                                                         const CrossLayout &layout);

} // namespace sgseq
