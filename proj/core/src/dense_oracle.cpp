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

#include "sgseq/dense_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sgseq {

DenseMatrix::DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex{0.0, 0.0}) {}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix &rhs) const {
    if (rhs.dim_ != dim_) {
        throw std::invalid_argument("matrix dimension mismatch");
    }
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex a = (*this)(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < dim_; ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

std::vector<Complex> DenseMatrix::apply(std::span<const Complex> v) const {
    if (v.size() != dim_) {
        throw std::invalid_argument("vector length does not match matrix dimension");
    }
    std::vector<Complex> out(dim_, Complex{0.0, 0.0});
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out[r] += (*this)(r, c) * v[c];
        }
    }
    return out;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

double DenseMatrix::unitarity_error() const {
    const DenseMatrix g = adjoint() * (*this);
    double worst = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            const Complex expect = r == c ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(g(r, c) - expect));
        }
    }
    return worst;
}

DenseMatrix embed_gate(const GateOp &gate, std::size_t n_qubits) {
    validate_gate(gate, n_qubits);
    const auto local = gate_matrix(gate);
    const auto targets = gate.qubits();
    const std::size_t local_dim = std::size_t{1} << targets.size();
    std::size_t target_mask = 0;
    for (std::size_t t : targets) {
        target_mask |= std::size_t{1} << t;
    }
    auto local_index = [&](std::size_t i) {
        std::size_t li = 0;
        for (std::size_t j = 0; j < targets.size(); ++j) {
            li |= ((i >> targets[j]) & 1U) << j;
        }
        return li;
    };
    const std::size_t dim = std::size_t{1} << n_qubits;
    DenseMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            if ((r & ~target_mask) != (c & ~target_mask)) {
                continue;
            }
            m(r, c) = local[local_index(r) * local_dim + local_index(c)];
        }
    }
    return m;
}

DenseMatrix dense_unitary_oracle(const Circuit &circuit) {
    const std::size_t n = circuit.n_qubits();
    if (n > kOracleMaxQubits) {
        throw std::length_error("dense oracle is limited to " + std::to_string(kOracleMaxQubits) +
                                " qubits, circuit has " + std::to_string(n));
    }
    DenseMatrix total = DenseMatrix::identity(std::size_t{1} << n);
    for (const auto &ins : circuit.ops()) {
        if (ins.gate.is_measurement() || ins.condition) {
            throw std::invalid_argument("dense oracle only accepts unitary, unconditioned gates");
        }
        total = embed_gate(ins.gate, n) * total;
    }
    return total;
}

} // namespace sgseq
