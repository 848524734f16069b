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

#include "sgseq/decode.hpp"

#include <stdexcept>
#include <string>

namespace sgseq {

namespace {

std::size_t count_ones(std::string_view bits) {
    std::size_t ones = 0;
    for (char c : bits) {
        if (c == '1') {
            ++ones;
        } else if (c != '0') {
            throw std::invalid_argument("probe bitstring contains '" + std::string(1, c) + "'");
        }
    }
    return ones;
}

void check_width(std::string_view bits, std::size_t N) {
    if (bits.size() != 2 * N) {
        throw std::invalid_argument("probe bitstring '" + std::string(bits) + "' has length " +
                                    std::to_string(bits.size()) + ", expected " +
                                    std::to_string(2 * N));
    }
}

std::size_t ones_at(std::uint64_t index, const std::vector<std::size_t> &qubits) {
    std::size_t ones = 0;
    for (std::size_t q : qubits) {
        ones += (index >> q) & 1U;
    }
    return ones;
}

} // namespace

std::string_view to_string(ZCollective v) noexcept {
    switch (v) {
    case ZCollective::Zero:
        return "Zero";
    case ZCollective::One:
        return "One";
    case ZCollective::Ambiguous:
        break;
    }
    return "Ambiguous";
}

std::string_view to_string(XCollective v) noexcept {
    switch (v) {
    case XCollective::Plus:
        return "Plus";
    case XCollective::Minus:
        return "Minus";
    case XCollective::Ambiguous:
        break;
    }
    return "Ambiguous";
}

std::string_view to_string(Parity v) noexcept { return v == Parity::Even ? "Even" : "Odd"; }

ZCollective majority(std::size_t ones, std::size_t width) noexcept {
    if (2 * ones < width) {
        return ZCollective::Zero;
    }
    if (2 * ones > width) {
        return ZCollective::One;
    }
    return ZCollective::Ambiguous;
}

ZCollective decode_z_collective(std::string_view bits, std::size_t N) {
    check_width(bits, N);
    return majority(count_ones(bits), bits.size());
}

XCollective decode_x_collective(std::string_view bits, std::size_t N) {
    return static_cast<XCollective>(decode_z_collective(bits, N));
}

Parity parity_of(std::string_view bits) {
    return count_ones(bits) % 2 == 0 ? Parity::Even : Parity::Odd;
}

DecodedShot RegisterMap::decode(std::uint64_t basis_index) const {
    DecodedShot shot;
    shot.system = static_cast<int>((basis_index >> system) & 1U);
    const std::size_t x_ones = ones_at(basis_index, x_probes);
    shot.x = static_cast<XCollective>(majority(x_ones, x_probes.size()));
    shot.x_parity = x_ones % 2 == 0 ? Parity::Even : Parity::Odd;
    shot.z = majority(ones_at(basis_index, z_probes), z_probes.size());
    if (ancilla) {
        shot.ancilla = static_cast<int>((basis_index >> *ancilla) & 1U);
    }
    return shot;
}

ProbabilityTables frequencies(const CountTables &counts) {
    ProbabilityTables out;
    if (counts.total == 0) {
        return out;
    }
    const double scale = 1.0 / static_cast<double>(counts.total);
    auto conv = [scale](std::uint64_t v) { return static_cast<double>(v) * scale; };
    out.total = 1.0;
    for (std::size_t i = 0; i < 2; ++i) {
        out.system[i] = conv(counts.system[i]);
        out.parity[i] = conv(counts.parity[i]);
    }
    for (std::size_t i = 0; i < 3; ++i) {
        out.x_collective[i] = conv(counts.x_collective[i]);
        out.z_collective[i] = conv(counts.z_collective[i]);
        for (std::size_t s = 0; s < 2; ++s) {
            out.system_z[s][i] = conv(counts.system_z[s][i]);
            out.x_system[i][s] = conv(counts.x_system[i][s]);
            for (std::size_t p = 0; p < 2; ++p) {
                out.parity_system_z[p][s][i] = conv(counts.parity_system_z[p][s][i]);
            }
        }
    }
    return out;
}

} // namespace sgseq
