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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace sgseq {

enum class ZCollective { Zero, One, Ambiguous };
enum class XCollective { Plus, Minus, Ambiguous };
enum class Parity { Even, Odd };

[[nodiscard]] std::string_view to_string(ZCollective v) noexcept;
[[nodiscard]] std::string_view to_string(XCollective v) noexcept;
[[nodiscard]] std::string_view to_string(Parity v) noexcept;

/// Majority vote over a 2N-bit Z-probe register; a tie is Ambiguous.
/// Throws std::invalid_argument if bits.size() != 2N or a character is not
/// '0'/'1'.
[[nodiscard]] ZCollective decode_z_collective(std::string_view bits, std::size_t N);

/// Same vote for an X-probe register read after the readout rotations, where
/// bit 0 stands for |+>.
[[nodiscard]] XCollective decode_x_collective(std::string_view bits, std::size_t N);

[[nodiscard]] Parity parity_of(std::string_view bits);

/// Vote on a register of `width` bits containing `ones` ones.
[[nodiscard]] ZCollective majority(std::size_t ones, std::size_t width) noexcept;

struct DecodedShot {
    int system = 0;
    XCollective x = XCollective::Ambiguous;
    ZCollective z = ZCollective::Ambiguous;
    Parity x_parity = Parity::Even;
    std::optional<int> ancilla;
};

/// Where each logical register lives inside the simulated qubit array.
struct RegisterMap {
    std::size_t system = 0;
    std::vector<std::size_t> x_probes;
    std::vector<std::size_t> z_probes;
    std::optional<std::size_t> ancilla;

    [[nodiscard]] DecodedShot decode(std::uint64_t basis_index) const;
};

/**
 * Decoded outcome tallies. With T = std::uint64_t these are shot counts;
 * with T = double they hold probabilities. Every table sums to `total`.
 */
template <typename T> struct OutcomeTables {
    T total{};
    std::array<T, 2> system{};
    std::array<T, 3> x_collective{};
    std::array<T, 3> z_collective{};
    std::array<T, 2> parity{};
    /// [system][z_collective]
    std::array<std::array<T, 3>, 2> system_z{};
    /// [x_collective][system]
    std::array<std::array<T, 2>, 3> x_system{};
    /// [parity][system][z_collective]
    std::array<std::array<std::array<T, 3>, 2>, 2> parity_system_z{};

    void add(const DecodedShot &shot, T weight) {
        const auto s = static_cast<std::size_t>(shot.system);
        const auto x = static_cast<std::size_t>(shot.x);
        const auto z = static_cast<std::size_t>(shot.z);
        const auto p = static_cast<std::size_t>(shot.x_parity);
        total += weight;
        system[s] += weight;
        x_collective[x] += weight;
        z_collective[z] += weight;
        parity[p] += weight;
        system_z[s][z] += weight;
        x_system[x][s] += weight;
        parity_system_z[p][s][z] += weight;
    }

    [[nodiscard]] T parity_system(Parity parity_value, int system_bit) const {
        const auto &row = parity_system_z[static_cast<std::size_t>(parity_value)]
                                         [static_cast<std::size_t>(system_bit)];
        return row[0] + row[1] + row[2];
    }

    friend bool operator==(const OutcomeTables &, const OutcomeTables &) = default;
};

using CountTables = OutcomeTables<std::uint64_t>;
using ProbabilityTables = OutcomeTables<double>;

/// Count tables rescaled to frequencies (all zero when total is zero).
[[nodiscard]] ProbabilityTables frequencies(const CountTables &counts);

} // namespace sgseq
