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

#include "sgseq/layout.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace sgseq {

std::vector<Bond> chain_bonds(std::span<const std::size_t> chain) {
    std::vector<Bond> bonds;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        bonds.push_back({chain[k], chain[k + 1]});
    }
    return bonds;
}

CrossLayout::CrossLayout(std::size_t arm_half_length) : n_(arm_half_length) {
    if (n_ == 0) {
        throw std::invalid_argument("cross layout needs arm half-length >= 1");
    }
    for (std::size_t i = 0; i <= 2 * n_; ++i) {
        vertical_.push_back(i);
    }
    for (std::size_t i = 0; i < n_; ++i) {
        horizontal_.push_back(2 * n_ + 1 + i);
    }
    horizontal_.push_back(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        horizontal_.push_back(3 * n_ + 1 + i);
    }
    for (const auto *chain : {&vertical_, &horizontal_}) {
        for (const auto &bond : chain_bonds(*chain)) {
            adjacency_.insert({std::min(bond.a, bond.b), std::max(bond.a, bond.b)});
        }
    }
}

std::vector<std::size_t> CrossLayout::vertical_probes() const {
    std::vector<std::size_t> out;
    std::copy_if(vertical_.begin(), vertical_.end(), std::back_inserter(out),
                 [&](std::size_t q) { return q != center(); });
    return out;
}

std::vector<std::size_t> CrossLayout::horizontal_probes() const {
    std::vector<std::size_t> out;
    std::copy_if(horizontal_.begin(), horizontal_.end(), std::back_inserter(out),
                 [&](std::size_t q) { return q != center(); });
    return out;
}

bool CrossLayout::adjacent(std::size_t a, std::size_t b) const {
    return adjacency_.contains({std::min(a, b), std::max(a, b)});
}

CrossLayout make_cross_layout(std::size_t arm_half_length) { return CrossLayout(arm_half_length); }

ValidationReport validate_nearest_neighbor(const Circuit &circuit, const CrossLayout &layout) {
    ValidationReport report;
    const auto &ops = circuit.ops();
    for (std::size_t k = 0; k < ops.size(); ++k) {
        const GateOp &g = ops[k].gate;
        if (g.arity() == 2 && !layout.adjacent(g.targets[0], g.targets[1])) {
            report.violations.push_back({k, g});
        }
    }
    return report;
}

} // namespace sgseq
