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

#include "sgseq/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sgseq/serialization.hpp"
#include "sgseq/simulator.hpp"

namespace sgseq {

namespace {

/// Branches lighter than this are treated as impossible.
constexpr double kBranchFloor = 1e-24;

void append_device(Circuit &circuit, Basis basis, const ExperimentConfig &config,
                   std::span<const std::size_t> chain) {
    if (config.params) {
        append_sg(circuit, basis, *config.params, chain);
    } else {
        append_reference_cat(circuit, basis, chain);
    }
}

void check_layout(const ExperimentConfig &config, const CrossLayout &layout) {
    config.validate();
    if (layout.arm_half_length() != config.N) {
        throw std::invalid_argument("layout arm half-length " +
                                    std::to_string(layout.arm_half_length()) +
                                    " does not match N = " + std::to_string(config.N));
    }
}

/// Both S-G devices in the configured order, on an `n_qubits` register whose
/// first 4N+1 qubits follow `layout`.
ExperimentPlan plan_devices(const ExperimentConfig &config, const CrossLayout &layout,
                            std::size_t n_qubits) {
    ExperimentPlan plan{Circuit(n_qubits),
                        StateVector::with_qubit(n_qubits, layout.center(), config.a, config.b),
                        RegisterMap{layout.center(), layout.horizontal_probes(),
                                    layout.vertical_probes(), std::nullopt},
                        false};
    const auto &vertical = layout.vertical_chain();
    const auto &horizontal = layout.horizontal_chain();
    if (config.order == Order::ZThenX) {
        append_device(plan.circuit, Basis::Z, config, vertical);
        append_device(plan.circuit, Basis::X, config, horizontal);
    } else {
        append_device(plan.circuit, Basis::X, config, horizontal);
        append_device(plan.circuit, Basis::Z, config, vertical);
    }
    if (!validate_nearest_neighbor(plan.circuit, layout).legal()) {
        throw std::logic_error("S-G devices produced a non-nearest-neighbour gate");
    }
    return plan;
}

void require_x_then_z(const ExperimentConfig &config, std::string_view what) {
    if (config.order != Order::XThenZ) {
        throw std::invalid_argument(std::string(what) +
                                    " requires the X-basis device first (order XThenZ)");
    }
}

} // namespace

std::string_view to_string(Order v) noexcept {
    return v == Order::ZThenX ? "Z_then_X" : "X_then_Z";
}

std::string_view to_string(ExperimentKind v) noexcept {
    switch (v) {
    case ExperimentKind::Sequential:
        return "sequential";
    case ExperimentKind::Wigner:
        return "wigner";
    case ExperimentKind::DelayedChoice:
        break;
    }
    return "delayed_choice";
}

std::string_view to_string(DelayedMode v) noexcept {
    return v == DelayedMode::MidCircuit ? "midcircuit" : "deferred";
}

void ExperimentConfig::validate() const {
    if (shots == 0) {
        throw std::invalid_argument("shots must be >= 1");
    }
    if (N == 0 || m == 0) {
        throw std::invalid_argument("N and m must be >= 1");
    }
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
        throw std::invalid_argument("system input must satisfy |a|^2 + |b|^2 = 1 within 1e-12");
    }
    if (params) {
        params->validate();
        if (params->N != N || params->m != m) {
            throw std::invalid_argument("params were calibrated for N = " +
                                        std::to_string(params->N) + ", m = " +
                                        std::to_string(params->m) + " but the run uses N = " +
                                        std::to_string(N) + ", m = " + std::to_string(m));
        }
    }
}

ExperimentPlan plan_sequential(const ExperimentConfig &config, const CrossLayout &layout) {
    check_layout(config, layout);
    ExperimentPlan plan = plan_devices(config, layout, layout.n_qubits());
    attach_readout_rotations(plan.circuit, layout.horizontal_probes());
    plan.x_readout = true;
    return plan;
}

ExperimentPlan plan_wigner(const ExperimentConfig &config, const CrossLayout &layout) {
    check_layout(config, layout);
    require_x_then_z(config, "the Wigner interferometer");
    return plan_devices(config, layout, layout.n_qubits());
}

ExperimentPlan plan_delayed_choice(const ExperimentConfig &config, const CrossLayout &layout,
                                   DelayedMode mode, double p_choice) {
    check_layout(config, layout);
    require_x_then_z(config, "the delayed-choice experiment");
    if (!(p_choice >= 0.0 && p_choice <= 1.0)) {
        throw std::invalid_argument("p_choice must lie in [0, 1]");
    }
    const std::size_t ancilla = layout.n_qubits();
    ExperimentPlan plan = plan_devices(config, layout, layout.n_qubits() + 1);
    plan.registers.ancilla = ancilla;
    plan.circuit.set_role(ancilla, QubitRole::Ancilla);

    // The choice is drawn only after the system has left the second device.
    if (p_choice > 0.0) {
        plan.circuit.append(GateOp::rot_y(ancilla, 2.0 * std::asin(std::sqrt(p_choice))));
    }
    const double readout = -std::numbers::pi / 2;
    const auto probes = layout.horizontal_probes();
    if (mode == DelayedMode::MidCircuit) {
        const std::size_t cbit = plan.circuit.measure(ancilla);
        for (std::size_t q : probes) {
            plan.circuit.append_conditioned(GateOp::rot_y(q, readout), cbit);
        }
    } else {
        for (std::size_t q : probes) {
            plan.circuit.append(GateOp::controlled_rot_y(ancilla, q, readout));
        }
    }
    return plan;
}

ExperimentReport execute_plan(const ExperimentPlan &plan, ExperimentKind kind,
                              const ExperimentConfig &config) {
    config.validate();
    ExperimentReport report;
    report.kind = kind;
    report.config = config;
    report.x_readout = plan.x_readout;
    report.params_hash = params_hash(config.params);

    const auto dist = analytic_distribution(plan.initial, plan.circuit);
    Rng rng(config.seed);
    report.raw = sample_distribution(dist, plan.initial.n_qubits(), config.shots, rng);

    for (const auto &[index, count] : report.raw.counts()) {
        report.sampled.add(plan.registers.decode(index), count);
    }
    for (std::size_t i = 0; i < dist.size(); ++i) {
        if (dist[i] > 0.0) {
            report.analytic.add(plan.registers.decode(i), dist[i]);
        }
    }

    if (plan.registers.ancilla) {
        for (int bit : {0, 1}) {
            BranchReport branch;
            branch.ancilla = bit;
            for (std::size_t i = 0; i < dist.size(); ++i) {
                const auto shot = plan.registers.decode(i);
                if (shot.ancilla == bit) {
                    branch.probability += dist[i];
                }
            }
            for (const auto &[index, count] : report.raw.counts()) {
                const auto shot = plan.registers.decode(index);
                if (shot.ancilla == bit) {
                    branch.sampled.add(shot, count);
                }
            }
            if (branch.probability > kBranchFloor) {
                for (std::size_t i = 0; i < dist.size(); ++i) {
                    const auto shot = plan.registers.decode(i);
                    if (shot.ancilla == bit && dist[i] > 0.0) {
                        branch.analytic.add(shot, dist[i] / branch.probability);
                    }
                }
            }
            report.branches.push_back(branch);
        }
    }
    return report;
}

ExperimentReport run_sequential(const ExperimentConfig &config, const CrossLayout &layout) {
    return execute_plan(plan_sequential(config, layout), ExperimentKind::Sequential, config);
}

ExperimentReport run_wigner(const ExperimentConfig &config, const CrossLayout &layout) {
    return execute_plan(plan_wigner(config, layout), ExperimentKind::Wigner, config);
}

ExperimentReport run_delayed_choice(const ExperimentConfig &config, const CrossLayout &layout,
                                    DelayedMode mode, double p_choice) {
    auto report = execute_plan(plan_delayed_choice(config, layout, mode, p_choice),
                               ExperimentKind::DelayedChoice, config);
    report.mode = mode;
    report.p_choice = p_choice;
    return report;
}

double ExperimentReport::ambiguous_rate_x() const {
    return sampled.total == 0 ? 0.0
                              : static_cast<double>(sampled.x_collective[2]) /
                                    static_cast<double>(sampled.total);
}

double ExperimentReport::ambiguous_rate_z() const {
    return sampled.total == 0 ? 0.0
                              : static_cast<double>(sampled.z_collective[2]) /
                                    static_cast<double>(sampled.total);
}

DelayedChoiceEquivalence delayed_choice_equivalence(const ExperimentConfig &config,
                                                    const CrossLayout &layout, double p_choice) {
    ExperimentConfig xz = config;
    xz.order = Order::XThenZ;
    const auto mid = plan_delayed_choice(xz, layout, DelayedMode::MidCircuit, p_choice);
    const auto deferred = plan_delayed_choice(xz, layout, DelayedMode::Deferred, p_choice);
    const auto d_mid = analytic_distribution(mid.initial, mid.circuit);
    const auto d_def = analytic_distribution(deferred.initial, deferred.circuit);
    const std::size_t ancilla = *mid.registers.ancilla;

    DelayedChoiceEquivalence eq;
    for (std::size_t i = 0; i < d_mid.size(); ++i) {
        eq.mode_max_abs_diff = std::max(eq.mode_max_abs_diff, std::abs(d_mid[i] - d_def[i]));
    }
    for (int bit : {0, 1}) {
        eq.mode_tvd = std::max(eq.mode_tvd,
                               total_variation_distance(condition_on_qubit(d_mid, ancilla, bit),
                                                        condition_on_qubit(d_def, ancilla, bit)));
    }

    const auto seq = plan_sequential(xz, layout);
    const auto wig = plan_wigner(xz, layout);
    const auto branch1 = condition_on_qubit(d_mid, ancilla, 1);
    const auto branch0 = condition_on_qubit(d_mid, ancilla, 0);
    auto weight = [](const std::vector<double> &v) {
        double w = 0.0;
        for (double x : v) {
            w += x;
        }
        return w;
    };
    if (weight(branch1) > 0.0) {
        eq.which_way_tvd =
            total_variation_distance(branch1, analytic_distribution(seq.initial, seq.circuit));
    }
    if (weight(branch0) > 0.0) {
        eq.interference_tvd =
            total_variation_distance(branch0, analytic_distribution(wig.initial, wig.circuit));
    }
    return eq;
}

double total_variation_distance(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("total variation distance needs equal alphabets");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        sum += std::abs(p[i] - q[i]);
    }
    return 0.5 * sum;
}

double total_variation_distance(const ShotHistogram &h1, const ShotHistogram &h2) {
    if (h1.n_qubits() != h2.n_qubits()) {
        throw std::invalid_argument("total variation distance needs equal register widths");
    }
    if (h1.shots() == 0 || h2.shots() == 0) {
        throw std::invalid_argument("total variation distance of an empty histogram");
    }
    const double s1 = static_cast<double>(h1.shots());
    const double s2 = static_cast<double>(h2.shots());
    double sum = 0.0;
    auto it1 = h1.counts().begin();
    auto it2 = h2.counts().begin();
    while (it1 != h1.counts().end() || it2 != h2.counts().end()) {
        if (it2 == h2.counts().end() || (it1 != h1.counts().end() && it1->first < it2->first)) {
            sum += static_cast<double>(it1->second) / s1;
            ++it1;
        } else if (it1 == h1.counts().end() || it2->first < it1->first) {
            sum += static_cast<double>(it2->second) / s2;
            ++it2;
        } else {
            sum += std::abs(static_cast<double>(it1->second) / s1 -
                            static_cast<double>(it2->second) / s2);
            ++it1;
            ++it2;
        }
    }
    return 0.5 * sum;
}

std::vector<double> joint_system_z(const ProbabilityTables &tables) {
    std::vector<double> out;
    for (const auto &row : tables.system_z) {
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

std::vector<double> condition_on_qubit(std::span<const double> distribution, std::size_t qubit,
                                       int value) {
    const std::size_t half = distribution.size() / 2;
    std::vector<double> out(half, 0.0);
    const std::size_t low = (std::size_t{1} << qubit) - 1;
    const std::size_t bit = static_cast<std::size_t>(value != 0) << qubit;
    double weight = 0.0;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i = ((k & ~low) << 1) | bit | (k & low);
        out[k] = distribution[i];
        weight += distribution[i];
    }
    if (!(weight > kBranchFloor)) {
        std::fill(out.begin(), out.end(), 0.0);
        return out;
    }
    for (double &v : out) {
        v /= weight;
    }
    return out;
}

} // namespace sgseq
