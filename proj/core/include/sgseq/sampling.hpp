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
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sgseq/circuit.hpp"
#include "sgseq/random.hpp"
#include "sgseq/state_vector.hpp"

namespace sgseq {

/**
 * Sampled measurement counts over a full register.
 *
 * Keys are basis indices (qubit 0 least significant); bitstring() renders
 * them qubit n-1 first. Sum of counts always equals `shots`.
 */
class ShotHistogram {
  public:
    ShotHistogram() = default;
    explicit ShotHistogram(std::size_t n_qubits) : n_qubits_(n_qubits) {}

    void add(std::uint64_t index, std::uint64_t count = 1);
    void merge(const ShotHistogram &other);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::uint64_t shots() const noexcept { return shots_; }
    [[nodiscard]] const std::map<std::uint64_t, std::uint64_t> &counts() const noexcept {
        return counts_;
    }
    [[nodiscard]] std::uint64_t count(std::uint64_t index) const;
    [[nodiscard]] std::uint64_t count(const std::string &bits) const;
    [[nodiscard]] std::string bitstring(std::uint64_t index) const;

    /// (bitstring, count) rows, descending by count, ties by bitstring.
    [[nodiscard]] std::vector<std::pair<std::string, std::uint64_t>> sorted_rows() const;

    friend bool operator==(const ShotHistogram &, const ShotHistogram &) = default;

  private:
    std::size_t n_qubits_ = 0;
    std::uint64_t shots_ = 0;
    std::map<std::uint64_t, std::uint64_t> counts_;
};

/// Shots are drawn in fixed blocks of this size; block k uses a generator
/// seeded with derive_seed(base, k), so results do not depend on the number
/// of worker threads.
inline constexpr std::uint64_t kShotBlock = 1024;

/// i.i.d. samples from the full-register Born distribution. Consumes one
/// draw from `rng` as the base seed. Throws std::invalid_argument on
/// shots == 0.
[[nodiscard]] ShotHistogram sample_shots(const StateVector &state, std::uint64_t shots,
                                         Rng &rng);

/// Samples terminal outcomes of a circuit that may contain mid-circuit
/// measurements, drawing from the branch-averaged distribution returned by
/// analytic_distribution.
[[nodiscard]] ShotHistogram sample_circuit(const StateVector &initial, const Circuit &circuit,
                                           std::uint64_t shots, Rng &rng);

/// Samples `shots` indices from a discrete distribution (need not be
/// normalized exactly). Exposed for callers that already hold one.
[[nodiscard]] ShotHistogram sample_distribution(std::span<const double> probabilities,
                                                std::size_t n_qubits, std::uint64_t shots,
                                                Rng &rng);

} // namespace sgseq
