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

#include "sgseq/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace sgseq {

namespace {

constexpr std::array<std::string_view, 2> kBits{"0", "1"};
constexpr std::array<std::string_view, 3> kZNames{"Zero", "One", "Ambiguous"};
constexpr std::array<std::string_view, 3> kXNames{"Plus", "Minus", "Ambiguous"};
constexpr std::array<std::string_view, 2> kParityNames{"Even", "Odd"};

template <typename T, std::size_t K>
Json labelled(const std::array<T, K> &values, const std::array<std::string_view, K> &names) {
    Json j = Json::object();
    for (std::size_t i = 0; i < K; ++i) {
        j[std::string(names[i])] = values[i];
    }
    return j;
}

template <typename T> Json tables_to_json(const OutcomeTables<T> &t) {
    Json j;
    j["total"] = t.total;
    j["system"] = labelled(t.system, kBits);
    j["x_collective"] = labelled(t.x_collective, kXNames);
    j["z_collective"] = labelled(t.z_collective, kZNames);
    j["parity"] = labelled(t.parity, kParityNames);
    Json sz = Json::object();
    for (std::size_t s = 0; s < 2; ++s) {
        sz[std::string(kBits[s])] = labelled(t.system_z[s], kZNames);
    }
    j["system_z"] = sz;
    Json xs = Json::object();
    for (std::size_t x = 0; x < 3; ++x) {
        xs[std::string(kXNames[x])] = labelled(t.x_system[x], kBits);
    }
    j["x_system"] = xs;
    Json psz = Json::object();
    for (std::size_t p = 0; p < 2; ++p) {
        Json inner = Json::object();
        for (std::size_t s = 0; s < 2; ++s) {
            inner[std::string(kBits[s])] = labelled(t.parity_system_z[p][s], kZNames);
        }
        psz[std::string(kParityNames[p])] = inner;
    }
    j["parity_system_z"] = psz;
    return j;
}

Json complex_to_json(Complex c) { return Json::array({c.real(), c.imag()}); }

/// P(system | parity) and P(system | x_collective) from a table.
template <typename T> Json conditionals(const OutcomeTables<T> &t) {
    Json j;
    Json given_parity = Json::object();
    for (std::size_t p = 0; p < 2; ++p) {
        const double row = static_cast<double>(t.parity[p]);
        Json cell = Json::object();
        for (int s = 0; s < 2; ++s) {
            const double v = static_cast<double>(t.parity_system(static_cast<Parity>(p), s));
            cell[std::string(kBits[static_cast<std::size_t>(s)])] = row > 0 ? v / row : 0.0;
        }
        given_parity[std::string(kParityNames[p])] = cell;
    }
    j["system_given_parity"] = given_parity;
    Json given_z = Json::object();
    for (std::size_t z = 0; z < 3; ++z) {
        const double col = static_cast<double>(t.z_collective[z]);
        Json cell = Json::object();
        for (std::size_t s = 0; s < 2; ++s) {
            cell[std::string(kBits[s])] =
                col > 0 ? static_cast<double>(t.system_z[s][z]) / col : 0.0;
        }
        given_z[std::string(kZNames[z])] = cell;
    }
    j["system_given_z_collective"] = given_z;
    return j;
}

template <typename T> T require(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw FormatError(std::string("field '") + key + "': " + e.what());
    }
}

} // namespace

Json to_json(const ParamSet &params) {
    Json j;
    j["N"] = params.N;
    j["m"] = params.m;
    j["gamma"] = params.gamma;
    j["beta"] = params.beta;
    return j;
}

ParamSet param_set_from_json(const Json &j) {
    // A calibration report carries its parameters under "best_params".
    if (j.is_object() && j.contains("best_params")) {
        return param_set_from_json(j.at("best_params"));
    }
    ParamSet p;
    p.N = require<std::size_t>(j, "N");
    p.m = require<std::size_t>(j, "m");
    p.gamma = require<std::vector<double>>(j, "gamma");
    p.beta = require<std::vector<double>>(j, "beta");
    try {
        p.validate();
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
    return p;
}

Json to_json(const GateOp &gate) {
    Json j;
    j["kind"] = to_string(gate.kind);
    j["targets"] = Json::array();
    for (std::size_t q : gate.qubits()) {
        j["targets"].push_back(q);
    }
    if (is_parametric(gate.kind)) {
        j["parameter"] = gate.parameter;
    }
    return j;
}

Json to_json(const Circuit &circuit) {
    Json j;
    j["n_qubits"] = circuit.n_qubits();
    Json roles = Json::array();
    Json readout = Json::array();
    for (std::size_t q = 0; q < circuit.n_qubits(); ++q) {
        roles.push_back(to_string(circuit.role(q)));
        if (circuit.has_readout_rotation(q)) {
            readout.push_back(q);
        }
    }
    j["roles"] = roles;
    j["readout"] = readout;
    Json ops = Json::array();
    for (const auto &ins : circuit.ops()) {
        Json op = to_json(ins.gate);
        if (ins.condition) {
            op["condition"] = *ins.condition;
        }
        ops.push_back(op);
    }
    j["ops"] = ops;
    return j;
}

Circuit circuit_from_json(const Json &j) {
    if (!j.is_object()) {
        throw FormatError("circuit document must be a JSON object");
    }
    const auto n = require<std::size_t>(j, "n_qubits");
    try {
        Circuit c(n);
        if (j.contains("roles")) {
            const auto roles = require<std::vector<std::string>>(j, "roles");
            if (roles.size() != n) {
                throw FormatError("roles must list one tag per qubit");
            }
            for (std::size_t q = 0; q < n; ++q) {
                const auto role = qubit_role_from_string(roles[q]);
                if (!role) {
                    throw FormatError("unknown qubit role '" + roles[q] + "'");
                }
                c.set_role(q, *role);
            }
        }
        if (j.contains("ops")) {
            const Json &ops = j.at("ops");
            if (!ops.is_array()) {
                throw FormatError("'ops' must be an array");
            }
            for (const Json &op : ops) {
                const auto name = require<std::string>(op, "kind");
                const auto kind = gate_kind_from_string(name);
                if (!kind) {
                    throw FormatError("unknown gate kind '" + name + "'");
                }
                const auto targets = require<std::vector<std::size_t>>(op, "targets");
                if (targets.size() != arity(*kind)) {
                    throw FormatError(name + " expects " + std::to_string(arity(*kind)) +
                                      " targets");
                }
                GateOp g{*kind, {targets[0], targets.size() > 1 ? targets[1] : 0}, 0.0};
                if (op.contains("parameter")) {
                    g.parameter = require<double>(op, "parameter");
                }
                if (op.contains("condition") && !op.at("condition").is_null()) {
                    c.append_conditioned(g, require<std::size_t>(op, "condition"));
                } else {
                    c.append(g);
                }
            }
        }
        if (j.contains("readout")) {
            for (std::size_t q : require<std::vector<std::size_t>>(j, "readout")) {
                c.mark_readout_rotation(q);
            }
        }
        return c;
    } catch (const FormatError &) {
        throw;
    } catch (const std::exception &e) {
        throw FormatError(std::string("invalid circuit: ") + e.what());
    }
}

Json to_json(const ShotHistogram &histogram) {
    Json j;
    j["n_qubits"] = histogram.n_qubits();
    j["shots"] = histogram.shots();
    j["bit_order"] = bit_order_description();
    Json counts = Json::object();
    for (const auto &[bits, count] : histogram.sorted_rows()) {
        counts[bits] = count;
    }
    j["counts"] = counts;
    return j;
}

Json to_json(const ValidationReport &report) {
    Json j;
    j["legal"] = report.legal();
    Json v = Json::array();
    for (const auto &violation : report.violations) {
        Json entry;
        entry["op_index"] = violation.op_index;
        entry["gate"] = to_json(violation.gate);
        v.push_back(entry);
    }
    j["violations"] = v;
    return j;
}

Json to_json(const CalibrationReport &report) {
    Json j;
    j["best_params"] = to_json(report.best_params);
    j["best_cost"] = report.best_cost;
    j["ground_energy"] = report.ground_energy;
    j["threshold"] = report.threshold();
    j["accepted"] = report.accepted();
    j["recommendation"] = report.recommendation();
    j["cat_fidelity_0"] = report.cat_fidelity_0;
    j["cat_fidelity_plus"] = report.cat_fidelity_plus;
    j["basis"] = report.basis == Basis::Z ? "Z" : "X";
    j["restarts"] = report.restarts;
    j["seed"] = report.seed;
    j["tolerance"] = report.tolerance;
    j["max_iters"] = report.max_iters;
    j["evaluations"] = report.evaluations;
    j["restart_costs"] = report.restart_costs;
    j["cost_trace_columns"] = Json::array({"restart", "iteration", "cost"});
    Json trace = Json::array();
    for (const auto &p : report.cost_trace) {
        trace.push_back(Json::array({p.restart, p.iteration, p.cost}));
    }
    j["cost_trace"] = trace;
    return j;
}

Json to_json(const CountTables &tables) { return tables_to_json(tables); }
Json to_json(const ProbabilityTables &tables) { return tables_to_json(tables); }

Json to_json(const ExperimentConfig &config) {
    Json j;
    j["order"] = to_string(config.order);
    j["N"] = config.N;
    j["m"] = config.m;
    j["shots"] = config.shots;
    j["seed"] = config.seed;
    j["input"] = {{"a", complex_to_json(config.a)}, {"b", complex_to_json(config.b)}};
    j["source"] = config.uses_reference() ? "reference_cat" : "variational";
    j["params"] = config.params ? to_json(*config.params) : Json(nullptr);
    return j;
}

Json to_json(const ExperimentReport &report) {
    Json j;
    j["kind"] = to_string(report.kind);
    j["config"] = to_json(report.config);
    if (report.mode) {
        j["mode"] = to_string(*report.mode);
        j["p_choice"] = report.p_choice;
    }
    j["x_readout"] = report.x_readout;
    j["params_hash"] = report.params_hash;
    j["ambiguous_rate"] = {{"x", report.ambiguous_rate_x()}, {"z", report.ambiguous_rate_z()}};
    j["sampled"] = to_json(report.sampled);
    j["analytic"] = to_json(report.analytic);
    j["conditional"] = {{"sampled", conditionals(report.sampled)},
                        {"analytic", conditionals(report.analytic)}};
    if (!report.branches.empty()) {
        Json branches = Json::array();
        for (const auto &b : report.branches) {
            Json entry;
            entry["ancilla"] = b.ancilla;
            entry["probability"] = b.probability;
            entry["sampled"] = to_json(b.sampled);
            entry["analytic"] = to_json(b.analytic);
            entry["conditional"] = {{"sampled", conditionals(b.sampled)},
                                    {"analytic", conditionals(b.analytic)}};
            branches.push_back(entry);
        }
        j["branches"] = branches;
    }
    j["raw"] = to_json(report.raw);
    return j;
}

std::string histogram_csv(const ShotHistogram &histogram) {
    std::string out = "bitstring,count\n";
    for (const auto &[bits, count] : histogram.sorted_rows()) {
        out += bits;
        out += ',';
        out += std::to_string(count);
        out += '\n';
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view data) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

std::string params_hash(const std::optional<ParamSet> &params) {
    if (!params) {
        return "reference";
    }
    return hex64(fnv1a64(to_json(*params).dump()));
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error &e) {
        throw FormatError(e.what());
    }
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::filesystem::path &path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write " + path.string());
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw std::runtime_error("short write to " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw std::runtime_error("cannot write " + path.string());
    }
}

} // namespace sgseq
