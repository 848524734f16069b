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

#include "sgseq/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace sgseq {

namespace {

constexpr Complex kI{0.0, 1.0};

/// Complex product without the C99 Annex G inf/nan recovery path.
inline Complex mul(Complex a, Complex b) noexcept {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

/// Spreads k around a zero at bit `q`.
inline std::size_t insert_zero(std::size_t k, std::size_t q) noexcept {
    const std::size_t low = (std::size_t{1} << q) - 1;
    return ((k & ~low) << 1) | (k & low);
}

/// Spreads k around zeros at bits lo < hi.
inline std::size_t insert_two_zeros(std::size_t k, std::size_t lo, std::size_t hi) noexcept {
    return insert_zero(insert_zero(k, lo), hi);
}

void apply_single(std::span<Complex> psi, std::size_t q, Complex m00, Complex m01, Complex m10,
                  Complex m11) {
    const std::size_t mask = std::size_t{1} << q;
    const std::size_t half = psi.size() / 2;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero(k, q);
        const std::size_t i1 = i0 | mask;
        const Complex v0 = psi[i0];
        const Complex v1 = psi[i1];
        psi[i0] = mul(m00, v0) + mul(m01, v1);
        psi[i1] = mul(m10, v0) + mul(m11, v1);
    }
}

void apply_phase_z(std::span<Complex> psi, std::size_t q, double beta) {
    const Complex even = std::exp(kI * beta);
    const Complex odd = std::conj(even);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        psi[i] = mul(psi[i], ((i >> q) & 1U) ? odd : even);
    }
}

void apply_phase_zz(std::span<Complex> psi, std::size_t a, std::size_t b, double gamma) {
    const Complex aligned = std::exp(kI * gamma);
    const Complex anti = std::conj(aligned);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        psi[i] = mul(psi[i], (((i >> a) ^ (i >> b)) & 1U) ? anti : aligned);
    }
}

void apply_xx(std::span<Complex> psi, std::size_t a, std::size_t b, double gamma) {
    const double c = std::cos(gamma);
    const Complex s = kI * std::sin(gamma);
    const std::size_t flip = (std::size_t{1} << a) | (std::size_t{1} << b);
    const std::size_t half = psi.size() / 2;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i = insert_zero(k, a);
        const std::size_t j = i ^ flip;
        const Complex vi = psi[i];
        const Complex vj = psi[j];
        psi[i] = c * vi + mul(s, vj);
        psi[j] = mul(s, vi) + c * vj;
    }
}

/// Visits (i0, i1) pairs with the control bit set, target 0 and 1.
template <typename F>
void for_each_controlled_pair(std::size_t size, std::size_t control, std::size_t target, F f) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    const std::size_t lo = std::min(control, target);
    const std::size_t hi = std::max(control, target);
    const std::size_t quarter = size / 4;
    for (std::size_t k = 0; k < quarter; ++k) {
        const std::size_t i0 = insert_two_zeros(k, lo, hi) | cmask;
        f(i0, i0 | tmask);
    }
}

} // namespace

void apply_gate(StateVector &state, const GateOp &gate) {
    validate_gate(gate, state.n_qubits());
    auto psi = state.amplitudes();
    const std::size_t q0 = gate.targets[0];
    const std::size_t q1 = gate.targets[1];
    const double t = gate.parameter;
    switch (gate.kind) {
    case GateKind::Hadamard: {
        const double r = 1.0 / std::sqrt(2.0);
        apply_single(psi, q0, r, r, r, -r);
        return;
    }
    case GateKind::RotX: {
        const Complex s = kI * std::sin(t);
        apply_single(psi, q0, std::cos(t), s, s, std::cos(t));
        return;
    }
    case GateKind::RotY: {
        const double c = std::cos(t / 2);
        const double s = std::sin(t / 2);
        apply_single(psi, q0, c, -s, s, c);
        return;
    }
    case GateKind::RotZ:
        apply_phase_z(psi, q0, t);
        return;
    case GateKind::ZZ:
        apply_phase_zz(psi, q0, q1, t);
        return;
    case GateKind::XX:
        apply_xx(psi, q0, q1, t);
        return;
    case GateKind::CNOT:
        for_each_controlled_pair(psi.size(), q0, q1,
                                 [&](std::size_t i0, std::size_t i1) { std::swap(psi[i0], psi[i1]); });
        return;
    case GateKind::ControlledRotY: {
        const double c = std::cos(t / 2);
        const double s = std::sin(t / 2);
        for_each_controlled_pair(psi.size(), q0, q1, [&](std::size_t i0, std::size_t i1) {
            const Complex v0 = psi[i0];
            const Complex v1 = psi[i1];
            psi[i0] = c * v0 - s * v1;
            psi[i1] = s * v0 + c * v1;
        });
        return;
    }
    case GateKind::MeasureCollapse:
        break;
    }
    throw std::invalid_argument("apply_gate cannot apply MeasureCollapse; use apply_circuit");
}

std::vector<std::uint8_t> apply_circuit(StateVector &state, const Circuit &circuit, Rng &rng) {
    if (circuit.n_qubits() != state.n_qubits()) {
        throw std::invalid_argument("circuit has " + std::to_string(circuit.n_qubits()) +
                                    " qubits, state has " + std::to_string(state.n_qubits()));
    }
    std::vector<std::uint8_t> record(circuit.num_cbits(), 0);
    for (const auto &ins : circuit.ops()) {
        if (ins.condition && record.at(*ins.condition) == 0) {
            continue;
        }
        if (ins.gate.is_measurement()) {
            record.at(*ins.cbit) =
                static_cast<std::uint8_t>(measure_and_collapse(state, ins.gate.targets[0], rng));
        } else {
            apply_gate(state, ins.gate);
        }
    }
    return record;
}

ProbabilityTable born_probabilities(const StateVector &state, std::span<const std::size_t> qubits) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] >= state.n_qubits()) {
            throw std::out_of_range("qubit " + std::to_string(qubits[i]) + " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (qubits[i] == qubits[j]) {
                throw std::invalid_argument("qubit " + std::to_string(qubits[i]) +
                                            " listed twice");
            }
        }
    }
    ProbabilityTable table{{qubits.begin(), qubits.end()},
                           std::vector<double>(std::size_t{1} << qubits.size(), 0.0)};
    const auto psi = state.amplitudes();
    for (std::size_t i = 0; i < psi.size(); ++i) {
        std::size_t pattern = 0;
        for (std::size_t j = 0; j < qubits.size(); ++j) {
            pattern |= ((i >> qubits[j]) & 1U) << j;
        }
        table.probabilities[pattern] += std::norm(psi[i]);
    }
    return table;
}

std::vector<double> basis_probabilities(const StateVector &state) {
    std::vector<double> p(state.size());
    const auto psi = state.amplitudes();
    for (std::size_t i = 0; i < psi.size(); ++i) {
        p[i] = std::norm(psi[i]);
    }
    return p;
}

double probability_one(const StateVector &state, std::size_t qubit) {
    if (qubit >= state.n_qubits()) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range");
    }
    const auto psi = state.amplitudes();
    double p1 = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if ((i >> qubit) & 1U) {
            p1 += std::norm(psi[i]);
        }
    }
    return p1;
}

double project(StateVector &state, std::size_t qubit, int outcome) {
    const double p1 = probability_one(state, qubit);
    const double p = outcome ? p1 : 1.0 - p1;
    if (!(p > 0.0)) {
        return 0.0;
    }
    const double scale = 1.0 / std::sqrt(p);
    auto psi = state.amplitudes();
    const auto keep = static_cast<std::size_t>(outcome != 0);
    for (std::size_t i = 0; i < psi.size(); ++i) {
        if (((i >> qubit) & 1U) == keep) {
            psi[i] *= scale;
        } else {
            psi[i] = 0.0;
        }
    }
    return p;
}

int measure_and_collapse(StateVector &state, std::size_t qubit, Rng &rng) {
    const double p1 = probability_one(state, qubit);
    const int outcome = uniform01(rng) < p1 ? 1 : 0;
    if (project(state, qubit, outcome) == 0.0) {
        throw std::logic_error("sampled a zero-probability branch on qubit " +
                               std::to_string(qubit));
    }
    return outcome;
}

double expectation_pauli_chain(const StateVector &state, PauliAxis axis,
                               std::span<const Bond> bonds) {
    for (const auto &bond : bonds) {
        if (bond.a >= state.n_qubits() || bond.b >= state.n_qubits()) {
            throw std::out_of_range("bond (" + std::to_string(bond.a) + ", " +
                                    std::to_string(bond.b) + ") out of range");
        }
    }
    const auto psi = state.amplitudes();
    double energy = 0.0;
    if (axis == PauliAxis::Z) {
        for (std::size_t i = 0; i < psi.size(); ++i) {
            const double p = std::norm(psi[i]);
            if (p == 0.0) {
                continue;
            }
            double sum = 0.0;
            for (const auto &bond : bonds) {
                sum += (((i >> bond.a) ^ (i >> bond.b)) & 1U) ? -1.0 : 1.0;
            }
            energy -= p * sum;
        }
        return energy;
    }
    for (const auto &bond : bonds) {
        const std::size_t flip = (std::size_t{1} << bond.a) | (std::size_t{1} << bond.b);
        double corr = 0.0;
        for (std::size_t i = 0; i < psi.size(); ++i) {
            corr += (std::conj(psi[i]) * psi[i ^ flip]).real();
        }
        energy -= corr;
    }
    return energy;
}

std::vector<Branch> enumerate_branches(const StateVector &initial, const Circuit &circuit,
                                       double min_probability) {
    if (circuit.n_qubits() != initial.n_qubits()) {
        throw std::invalid_argument("circuit has " + std::to_string(circuit.n_qubits()) +
                                    " qubits, state has " + std::to_string(initial.n_qubits()));
    }
    struct Pending {
        std::size_t next = 0;
        Branch branch;
    };
    std::vector<Branch> done;
    std::vector<Pending> stack;
    stack.push_back({0, Branch{{}, 1.0, initial}});
    const auto &ops = circuit.ops();
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        bool forked = false;
        for (std::size_t k = cur.next; k < ops.size() && !forked; ++k) {
            const auto &ins = ops[k];
            if (ins.condition && cur.branch.outcomes.at(*ins.condition) == 0) {
                continue;
            }
            if (!ins.gate.is_measurement()) {
                apply_gate(cur.branch.state, ins.gate);
                continue;
            }
            // Push outcome 1 first so outcome 0 is explored first.
            for (int outcome : {1, 0}) {
                Branch child{cur.branch.outcomes, cur.branch.probability, cur.branch.state};
                const double p = project(child.state, ins.gate.targets[0], outcome);
                child.probability *= p;
                if (p > 0.0 && child.probability > min_probability) {
                    child.outcomes.push_back(static_cast<std::uint8_t>(outcome));
                    stack.push_back({k + 1, std::move(child)});
                }
            }
            forked = true;
        }
        if (!forked) {
            done.push_back(std::move(cur.branch));
        }
    }
    return done;
}

std::vector<double> analytic_distribution(const StateVector &initial, const Circuit &circuit) {
    std::vector<double> dist(initial.size(), 0.0);
    for (const auto &branch : enumerate_branches(initial, circuit)) {
        const auto psi = branch.state.amplitudes();
        for (std::size_t i = 0; i < psi.size(); ++i) {
            dist[i] += branch.probability * std::norm(psi[i]);
        }
    }
    return dist;
}

} // namespace sgseq
