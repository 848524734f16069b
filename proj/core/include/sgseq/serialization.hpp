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

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sgseq/ansatz.hpp"
#include "sgseq/calibration.hpp"
#include "sgseq/circuit.hpp"
#include "sgseq/experiments.hpp"
#include "sgseq/layout.hpp"
#include "sgseq/sampling.hpp"

namespace sgseq {

using Json = nlohmann::ordered_json;

/// Malformed or schema-violating input document.
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// ParamSet: {"N": .., "m": .., "gamma": [..], "beta": [..]}. Doubles are
// written in shortest round-trip form, so load(save(p)) == p bit for bit.
[[nodiscard]] Json to_json(const ParamSet &params);
[[nodiscard]] ParamSet param_set_from_json(const Json &j);

// Circuit: {"n_qubits", "roles", "readout", "ops": [{"kind", "targets",
// "parameter", "condition"}]}.
[[nodiscard]] Json to_json(const GateOp &gate);
[[nodiscard]] Json to_json(const Circuit &circuit);
[[nodiscard]] Circuit circuit_from_json(const Json &j);

[[nodiscard]] Json to_json(const ShotHistogram &histogram);
[[nodiscard]] Json to_json(const ValidationReport &report);
[[nodiscard]] Json to_json(const CalibrationReport &report);
[[nodiscard]] Json to_json(const CountTables &tables);
[[nodiscard]] Json to_json(const ProbabilityTables &tables);
[[nodiscard]] Json to_json(const ExperimentConfig &config);
[[nodiscard]] Json to_json(const ExperimentReport &report);

/// "bitstring,count" header, rows sorted descending by count.
[[nodiscard]] std::string histogram_csv(const ShotHistogram &histogram);

[[nodiscard]] std::uint64_t fnv1a64(std::string_view data) noexcept;
[[nodiscard]] std::string hex64(std::uint64_t value);

/// Content hash of a ParamSet's canonical JSON, or "reference".
[[nodiscard]] std::string params_hash(const std::optional<ParamSet> &params);

/// Two-space indented JSON with trailing newline.
[[nodiscard]] std::string dump(const Json &j);

/// Parses JSON text; throws FormatError with the parser's message.
[[nodiscard]] Json parse_json(std::string_view text);

/// Throws std::runtime_error if the file cannot be read.
[[nodiscard]] std::string read_file(const std::filesystem::path &path);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path &path, std::string_view content);

} // namespace sgseq
