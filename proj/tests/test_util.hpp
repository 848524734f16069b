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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "sgseq/circuit.hpp"
#include "sgseq/state_vector.hpp"

namespace sgseq::testing {

using Mat = std::vector<std::vector<Complex>>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

inline Mat zeros(std::size_t d) { return Mat(d, std::vector<Complex>(d)); }

inline Mat eye(std::size_t d) {
    Mat m = zeros(d);
    for (std::size_t k = 0; k < d; ++k) {
        m[k][k] = 1.0;
    }
    return m;
}

inline Mat matmul(const Mat &a, const Mat &b) {
    const std::size_t d = a.size();
    Mat r = zeros(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            for (std::size_t j = 0; j < d; ++j) {
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

inline Mat add(const Mat &a, const Mat &b, Complex cb = 1.0) {
    Mat r = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            r[i][j] += cb * b[i][j];
        }
    }
    return r;
}

inline Mat scale(const Mat &a, Complex c) { return add(zeros(a.size()), a, c); }

/// Kronecker product a (x) b, where a acts on the more significant factor.
inline Mat kron(const Mat &a, const Mat &b) {
    const std::size_t da = a.size();
    const std::size_t db = b.size();
    Mat r = zeros(da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            for (std::size_t k = 0; k < db; ++k) {
                for (std::size_t l = 0; l < db; ++l) {
                    r[i * db + k][j * db + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return r;
}

inline Mat pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
inline Mat pauli_y() { return {{0.0, -kI}, {kI, 0.0}}; }
inline Mat pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }
inline Mat hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {{s, s}, {s, -s}};
}

/// exp(i theta P) for an involutory P.
inline Mat exp_i(const Mat &p, double theta) {
    return add(scale(eye(p.size()), std::cos(theta)), p, kI * std::sin(theta));
}

/// Full-register operator placing `single` on `qubit` (qubit 0 least significant).
inline Mat on_qubit(const Mat &single, std::size_t qubit, std::size_t n) {
    Mat r = {{1.0}};
    for (std::size_t q = n; q-- > 0;) {
        r = kron(r, q == qubit ? single : eye(2));
    }
    return r;
}

inline Mat projector(int bit) {
    return bit == 0 ? Mat{{1.0, 0.0}, {0.0, 0.0}} : Mat{{0.0, 0.0}, {0.0, 1.0}};
}

/// Textbook operator for a non-measurement gate on an n-qubit register.
inline Mat reference_operator(const GateOp &g, std::size_t n) {
    const auto a = g.targets[0];
    const auto b = g.targets[1];
    switch (g.kind) {
    case GateKind::Hadamard:
        return on_qubit(hadamard(), a, n);
    case GateKind::RotX:
        return on_qubit(exp_i(pauli_x(), g.parameter), a, n);
    case GateKind::RotZ:
        return on_qubit(exp_i(pauli_z(), g.parameter), a, n);
    case GateKind::RotY:
        return on_qubit(exp_i(pauli_y(), -g.parameter / 2.0), a, n);
    case GateKind::ZZ:
        return exp_i(matmul(on_qubit(pauli_z(), a, n), on_qubit(pauli_z(), b, n)), g.parameter);
    case GateKind::XX:
        return exp_i(matmul(on_qubit(pauli_x(), a, n), on_qubit(pauli_x(), b, n)), g.parameter);
    case GateKind::CNOT:
        return add(on_qubit(projector(0), a, n),
                   matmul(on_qubit(projector(1), a, n), on_qubit(pauli_x(), b, n)));
    case GateKind::ControlledRotY:
        return add(on_qubit(projector(0), a, n),
                   matmul(on_qubit(projector(1), a, n),
                          on_qubit(exp_i(pauli_y(), -g.parameter / 2.0), b, n)));
    case GateKind::MeasureCollapse:
        break;
    }
    return eye(std::size_t{1} << n);
}

inline std::vector<Complex> mat_apply(const Mat &m, const std::vector<Complex> &v) {
    std::vector<Complex> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            r[i] += m[i][j] * v[j];
        }
    }
    return r;
}

inline StateVector random_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << n);
    for (auto &x : amps) {
        x = {g(rng), g(rng)};
    }
    auto s = StateVector::from_amplitudes(std::move(amps));
    s.normalize();
    return s;
}

inline GateOp random_gate(std::size_t n, std::mt19937_64 &rng) {
    static constexpr GateKind kinds[] = {
        GateKind::Hadamard, GateKind::RotX, GateKind::RotZ,
        GateKind::RotY,     GateKind::ZZ,   GateKind::XX,
        GateKind::CNOT,     GateKind::ControlledRotY,
    };
    std::uniform_int_distribution<std::size_t> pick_kind(0, n > 1 ? 7 : 3);
    std::uniform_int_distribution<std::size_t> pick_qubit(0, n - 1);
    std::uniform_real_distribution<double> angle(-kPi, kPi);
    GateOp g;
    g.kind = kinds[pick_kind(rng)];
    g.targets[0] = pick_qubit(rng);
    if (g.arity() == 2) {
        do {
            g.targets[1] = pick_qubit(rng);
        } while (g.targets[1] == g.targets[0]);
    }
    if (is_parametric(g.kind)) {
        g.parameter = angle(rng);
    }
    return g;
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

} // namespace sgseq::testing
