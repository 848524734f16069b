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

#include "sgseq/ansatz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sgseq {

namespace {

void check_chain(std::span<const std::size_t> chain, std::size_t N) {
    if (chain.size() != 2 * N + 1) {
        throw std::invalid_argument("chain has " + std::to_string(chain.size()) +
                                    " qubits, expected 2N+1 = " + std::to_string(2 * N + 1));
    }
}

void tag_chain(Circuit &circuit, std::span<const std::size_t> chain, Basis basis) {
    const std::size_t mid = chain.size() / 2;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        circuit.set_role(chain[k], k == mid ? QubitRole::System
                                            : (basis == Basis::Z ? QubitRole::ZProbe
                                                                 : QubitRole::XProbe));
    }
}

} // namespace

ParamSet ParamSet::zeros(std::size_t N, std::size_t m) {
    return ParamSet{N, m, std::vector<double>(m, 0.0), std::vector<double>(m, 0.0)};
}

ParamSet ParamSet::from_flat(std::size_t N, std::size_t m, std::span<const double> flat) {
    if (flat.size() != 2 * m) {
        throw std::invalid_argument("flat parameter vector must have 2m entries");
    }
    return ParamSet{N, m, {flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(m)},
                    {flat.begin() + static_cast<std::ptrdiff_t>(m), flat.end()}};
}

std::vector<double> ParamSet::flat() const {
    std::vector<double> out(gamma);
    out.insert(out.end(), beta.begin(), beta.end());
    return out;
}

void ParamSet::validate() const {
    if (N == 0 || m == 0) {
        throw std::invalid_argument("ParamSet needs N >= 1 and m >= 1");
    }
    if (gamma.size() != m || beta.size() != m) {
        throw std::invalid_argument("ParamSet with m = " + std::to_string(m) + " has " +
                                    std::to_string(gamma.size()) + " gammas and " +
                                    std::to_string(beta.size()) + " betas");
    }
    for (const auto *list : {&gamma, &beta}) {
        for (double v : *list) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("ParamSet contains a non-finite angle");
            }
        }
    }
}

std::vector<std::size_t> chain_probes(std::span<const std::size_t> chain) {
    std::vector<std::size_t> out;
    const std::size_t mid = chain.size() / 2;
    for (std::size_t k = 0; k < chain.size(); ++k) {
        if (k != mid) {
            out.push_back(chain[k]);
        }
    }
    return out;
}

void append_sg_z(Circuit &circuit, const ParamSet &params, std::span<const std::size_t> chain) {
    params.validate();
    check_chain(chain, params.N);
    const auto probes = chain_probes(chain);
    for (std::size_t q : probes) {
        circuit.append(GateOp::hadamard(q));
    }
    for (std::size_t k = 0; k < params.m; ++k) {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            circuit.append(GateOp::zz(chain[i], chain[i + 1], params.gamma[k]));
        }
        for (std::size_t q : probes) {
            circuit.append(GateOp::rot_x(q, params.beta[k]));
        }
    }
    tag_chain(circuit, chain, Basis::Z);
}

void append_sg_x(Circuit &circuit, const ParamSet &params, std::span<const std::size_t> chain) {
    params.validate();
    check_chain(chain, params.N);
    const auto probes = chain_probes(chain);
    for (std::size_t k = 0; k < params.m; ++k) {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            circuit.append(GateOp::xx(chain[i], chain[i + 1], params.gamma[k]));
        }
        for (std::size_t q : probes) {
            circuit.append(GateOp::rot_z(q, params.beta[k]));
        }
    }
    tag_chain(circuit, chain, Basis::X);
}

void append_sg(Circuit &circuit, Basis basis, const ParamSet &params,
               std::span<const std::size_t> chain) {
    if (basis == Basis::Z) {
        append_sg_z(circuit, params, chain);
    } else {
        append_sg_x(circuit, params, chain);
    }
}

Circuit build_sg_z(const ParamSet &params, std::span<const std::size_t> chain,
                   std::size_t n_qubits) {
    Circuit c(n_qubits);
    append_sg_z(c, params, chain);
    return c;
}

Circuit build_sg_x(const ParamSet &params, std::span<const std::size_t> chain,
                   std::size_t n_qubits) {
    Circuit c(n_qubits);
    append_sg_x(c, params, chain);
    return c;
}

void attach_readout_rotations(Circuit &circuit, std::span<const std::size_t> probes) {
    for (std::size_t q : probes) {
        if (q >= circuit.n_qubits()) {
            throw std::out_of_range("readout probe " + std::to_string(q) + " out of range");
        }
        if (circuit.has_readout_rotation(q)) {
            throw std::logic_error("readout rotation already attached to qubit " +
                                   std::to_string(q));
        }
    }
    for (std::size_t q : probes) {
        circuit.append(GateOp::rot_y(q, -std::numbers::pi / 2));
        circuit.mark_readout_rotation(q);
    }
}

void append_reference_cat(Circuit &circuit, Basis basis, std::span<const std::size_t> chain) {
    if (chain.size() % 2 == 0 || chain.size() < 3) {
        throw std::invalid_argument("reference cat chain must have 2N+1 >= 3 qubits");
    }
    const std::size_t mid = chain.size() / 2;
    if (basis == Basis::X) {
        circuit.append(GateOp::hadamard(chain[mid]));
    }
    for (std::size_t k = 1; k <= mid; ++k) {
        circuit.append(GateOp::cnot(chain[mid - k + 1], chain[mid - k]));
        circuit.append(GateOp::cnot(chain[mid + k - 1], chain[mid + k]));
    }
    if (basis == Basis::X) {
        for (std::size_t q : chain) {
            circuit.append(GateOp::hadamard(q));
        }
    }
    tag_chain(circuit, chain, basis);
}

Circuit build_reference_cat(Basis basis, std::span<const std::size_t> chain,
                            std::size_t n_qubits) {
    Circuit c(n_qubits);
    append_reference_cat(c, basis, chain);
    return c;
}

} // namespace sgseq
