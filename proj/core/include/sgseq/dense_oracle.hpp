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
#include <span>
#include <vector>

#include "sgseq/circuit.hpp"
#include "sgseq/state_vector.hpp"

namespace sgseq {

/// Square complex matrix, row-major.
class DenseMatrix {
  public:
    explicit DenseMatrix(std::size_t dim);
    static DenseMatrix identity(std::size_t dim);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    Complex &operator()(std::size_t r, std::size_t c) noexcept { return data_[r * dim_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const noexcept {
        return data_[r * dim_ + c];
    }

    [[nodiscard]] DenseMatrix operator*(const DenseMatrix &rhs) const;
    [[nodiscard]] std::vector<Complex> apply(std::span<const Complex> v) const;
    [[nodiscard]] DenseMatrix adjoint() const;

    /// max |(U^dagger U - I)_{rc}|.
    [[nodiscard]] double unitarity_error() const;

  private:
    std::size_t dim_;
    std::vector<Complex> data_;
};

inline constexpr std::size_t kOracleMaxQubits = 6;

/// Embeds one gate into the full 2^n space by Kronecker structure: the entry
/// (r, c) is the local matrix entry when r and c agree off the targets.
[[nodiscard]] DenseMatrix embed_gate(const GateOp &gate, std::size_t n_qubits);

/// Brute-force product of embedded gate matrices. Small instances only:
/// throws std::length_error above kOracleMaxQubits and
/// std::invalid_argument on measurements or conditioned gates.
[[nodiscard]] DenseMatrix dense_unitary_oracle(const Circuit &circuit);

} // namespace sgseq
