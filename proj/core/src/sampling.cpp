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

#include "sgseq/sampling.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "sgseq/parallel.hpp"
#include "sgseq/simulator.hpp"

namespace sgseq {

void ShotHistogram::add(std::uint64_t index, std::uint64_t count) {
    if (n_qubits_ < 64 && (index >> n_qubits_) != 0) {
        throw std::out_of_range("histogram index " + std::to_string(index) + " exceeds " +
                                std::to_string(n_qubits_) + " qubits");
    }
    if (count == 0) {
        return;
    }
    counts_[index] += count;
    shots_ += count;
}

void ShotHistogram::merge(const ShotHistogram &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw std::invalid_argument("cannot merge histograms of different widths");
    }
    for (const auto &[index, count] : other.counts_) {
        add(index, count);
    }
}

std::uint64_t ShotHistogram::count(std::uint64_t index) const {
    const auto it = counts_.find(index);
    return it == counts_.end() ? 0 : it->second;
}

std::uint64_t ShotHistogram::count(const std::string &bits) const {
    if (bits.size() != n_qubits_) {
        throw std::invalid_argument("bitstring '" + bits + "' does not have " +
                                    std::to_string(n_qubits_) + " characters");
    }
    return count(from_bitstring(bits));
}

std::string ShotHistogram::bitstring(std::uint64_t index) const {
    return to_bitstring(index, n_qubits_);
}

std::vector<std::pair<std::string, std::uint64_t>> ShotHistogram::sorted_rows() const {
    std::vector<std::pair<std::string, std::uint64_t>> rows;
    rows.reserve(counts_.size());
    for (const auto &[index, count] : counts_) {
        rows.emplace_back(bitstring(index), count);
    }
    std::sort(rows.begin(), rows.end(), [](const auto &x, const auto &y) {
        return x.second != y.second ? x.second > y.second : x.first < y.first;
    });
    return rows;
}

ShotHistogram sample_distribution(std::span<const double> probabilities, std::size_t n_qubits,
                                  std::uint64_t shots, Rng &rng) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be positive");
    }
    if (probabilities.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("distribution length does not match register width");
    }
    std::vector<double> cumulative(probabilities.size());
    std::partial_sum(probabilities.begin(), probabilities.end(), cumulative.begin());
    const double total = cumulative.back();
    if (!(total > 0.0)) {
        throw std::invalid_argument("distribution has no weight");
    }
    // Last index with nonzero weight; guards against rounding past the end.
    std::size_t last = probabilities.size() - 1;
    while (last > 0 && probabilities[last] == 0.0) {
        --last;
    }

    const std::uint64_t base = rng();
    const std::uint64_t blocks = (shots + kShotBlock - 1) / kShotBlock;
    std::vector<ShotHistogram> partial(blocks, ShotHistogram(n_qubits));
    parallel_for(blocks, worker_threads(), [&](std::size_t block) {
        Rng local(derive_seed(base, block));
        const std::uint64_t begin = block * kShotBlock;
        const std::uint64_t end = std::min(shots, begin + kShotBlock);
        for (std::uint64_t s = begin; s < end; ++s) {
            const double u = uniform01(local) * total;
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            auto index = static_cast<std::size_t>(it - cumulative.begin());
            partial[block].add(std::min(index, last));
        }
    });
    ShotHistogram out(n_qubits);
    for (const auto &h : partial) {
        out.merge(h);
    }
    return out;
}

ShotHistogram sample_shots(const StateVector &state, std::uint64_t shots, Rng &rng) {
    const auto p = basis_probabilities(state);
    return sample_distribution(p, state.n_qubits(), shots, rng);
}

ShotHistogram sample_circuit(const StateVector &initial, const Circuit &circuit,
                             std::uint64_t shots, Rng &rng) {
    const auto p = analytic_distribution(initial, circuit);
    return sample_distribution(p, initial.n_qubits(), shots, rng);
}

} // namespace sgseq
