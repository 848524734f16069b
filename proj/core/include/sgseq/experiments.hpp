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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgseq/ansatz.hpp"
#include "sgseq/circuit.hpp"
#include "sgseq/decode.hpp"
#include "sgseq/layout.hpp"
#include "sgseq/sampling.hpp"
#include "sgseq/state_vector.hpp"

namespace sgseq {

/// Which S-G device the system qubit traverses first.
enum class Order { ZThenX, XThenZ };

enum class ExperimentKind { Sequential, Wigner, DelayedChoice };

/// Midcircuit: the ancilla is measured after the second device and classically
/// controls the X readout rotations. Deferred: ControlledRotY from the ancilla,
/// ancilla measured at the end.
enum class DelayedMode { MidCircuit, Deferred };

[[nodiscard]] std::string_view to_string(Order v) noexcept;
[[nodiscard]] std::string_view to_string(ExperimentKind v) noexcept;
[[nodiscard]] std::string_view to_string(DelayedMode v) noexcept;

struct ExperimentConfig {
    Order order = Order::XThenZ;
    std::size_t N = 3;
    std::size_t m = 3;
    std::uint64_t shots = 8192;
    std::uint64_t seed = 0;
    /// System qubit input a|0> + b|1>.
    Complex a{1.0, 0.0};
    Complex b{0.0, 0.0};
    /// Calibrated angles; empty selects the ideal reference-cat devices.
    std::optional<ParamSet> params;

    [[nodiscard]] bool uses_reference() const noexcept { return !params.has_value(); }

    /// Throws std::invalid_argument on shots == 0, N == 0, a non-normalized
    /// input (tolerance 1e-12) or params whose N/m disagree with ours.
    void validate() const;
};

/// A fully composed experiment: circuit, initial state and register map.
struct ExperimentPlan {
    Circuit circuit;
    StateVector initial;
    RegisterMap registers;
    bool x_readout = true;
};

[[nodiscard]] ExperimentPlan plan_sequential(const ExperimentConfig &config,
                                             const CrossLayout &layout);
[[nodiscard]] ExperimentPlan plan_wigner(const ExperimentConfig &config,
                                         const CrossLayout &layout);
[[nodiscard]] ExperimentPlan plan_delayed_choice(const ExperimentConfig &config,
                                                 const CrossLayout &layout, DelayedMode mode,
                                                 double p_choice);

struct BranchReport {
    int ancilla = 0;
    /// Analytic probability of this ancilla outcome.
    double probability = 0.0;
    CountTables sampled;
    /// Probabilities conditioned on the ancilla outcome.
    ProbabilityTables analytic;
};

struct ExperimentReport {
    ExperimentKind kind = ExperimentKind::Sequential;
    ExperimentConfig config;
    std::optional<DelayedMode> mode;
    double p_choice = 0.0;
    bool x_readout = true;
    ShotHistogram raw;
    CountTables sampled;
    ProbabilityTables analytic;
    std::vector<BranchReport> branches;
    std::string params_hash;

    [[nodiscard]] double ambiguous_rate_x() const;
    [[nodiscard]] double ambiguous_rate_z() const;
};

/// Runs a plan: samples config.shots outcomes, decodes them, and attaches the
/// analytic tables computed from the exact outcome distribution.
[[nodiscard]] ExperimentReport execute_plan(const ExperimentPlan &plan, ExperimentKind kind,
                                            const ExperimentConfig &config);

[[nodiscard]] ExperimentReport run_sequential(const ExperimentConfig &config,
                                              const CrossLayout &layout);

/// Sequential X-then-Z run without X readout rotations, with X-probe parity
/// classification. Throws std::invalid_argument unless config.order is
/// XThenZ.
[[nodiscard]] ExperimentReport run_wigner(const ExperimentConfig &config,
                                          const CrossLayout &layout);

/// Ancilla prepared in sqrt(1-p)|0> + sqrt(p)|1>; outcome 1 applies the X
/// readout rotations. Throws std::invalid_argument for p outside [0, 1] or an
/// order other than XThenZ.
[[nodiscard]] ExperimentReport run_delayed_choice(const ExperimentConfig &config,
                                                  const CrossLayout &layout, DelayedMode mode,
                                                  double p_choice);

/// Analytic agreement checks for the delayed-choice experiment.
struct DelayedChoiceEquivalence {
    /// Max over ancilla outcomes of the TVD between the midcircuit and
    /// deferred branch-conditioned distributions.
    double mode_tvd = 0.0;
    /// Max elementwise difference between the two full distributions.
    double mode_max_abs_diff = 0.0;
    /// Branch 1 vs the sequential X-then-Z run; empty if branch 1 has no weight.
    std::optional<double> which_way_tvd;
    /// Branch 0 vs the Wigner run; empty if branch 0 has no weight.
    std::optional<double> interference_tvd;
};

[[nodiscard]] DelayedChoiceEquivalence delayed_choice_equivalence(const ExperimentConfig &config,
                                                                  const CrossLayout &layout,
                                                                  double p_choice);

/// 1/2 sum |p - q|. Throws std::invalid_argument on length mismatch.
[[nodiscard]] double total_variation_distance(std::span<const double> p,
                                              std::span<const double> q);

/// Distance between normalized histograms over the same register width.
[[nodiscard]] double total_variation_distance(const ShotHistogram &h1, const ShotHistogram &h2);

/// Joint (system, z_collective) table flattened to 6 probabilities.
[[nodiscard]] std::vector<double> joint_system_z(const ProbabilityTables &tables);

/// Conditional outcome distribution given the ancilla bit, over the
/// remaining qubits (ancilla removed from the index). Zero vector if the
/// branch has no weight.
[[nodiscard]] std::vector<double> condition_on_qubit(std::span<const double> distribution,
                                                     std::size_t qubit, int value);

} // namespace sgseq
