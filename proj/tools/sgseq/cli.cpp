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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "sgseq/calibration.hpp"
#include "sgseq/experiments.hpp"
#include "sgseq/layout.hpp"
#include "sgseq/serialization.hpp"

#ifndef SGSEQ_VERSION
#define SGSEQ_VERSION "0.0.0"
#endif

namespace sgseq::cli {

namespace {

namespace fs = std::filesystem;

/// Carries an exit code up to run().
class CliError : public std::runtime_error {
  public:
    CliError(int code, const std::string &message) : std::runtime_error(message), code_(code) {}
    [[nodiscard]] int code() const noexcept { return code_; }

  private:
    int code_;
};

struct InputFile {
    std::string path;
    std::string hash;
};

struct Context {
    std::vector<std::string> argv;
    std::ostream &out;
    std::ostream &err;
};

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

bool is_output_flag(std::string_view a) {
    return a == "--out" || a == "--csv" || a == "--circuit-out" || a == "--report";
}

/// Invocation without output destinations, so a replay records the same argv.
std::vector<std::string> recorded_argv(const std::vector<std::string> &argv) {
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < argv.size(); ++i) {
        const std::string &a = argv[i];
        if (is_output_flag(a)) {
            ++i;
            continue;
        }
        const auto eq = a.find('=');
        if (eq != std::string::npos && is_output_flag(std::string_view(a).substr(0, eq))) {
            continue;
        }
        kept.push_back(a);
    }
    return kept;
}

Json manifest(const Context &ctx, std::string_view command, const Json &config,
              std::uint64_t seed, const std::vector<InputFile> &inputs) {
    Json j;
    j["command"] = command;
    j["argv"] = recorded_argv(ctx.argv);
    j["config"] = config;
    j["seed"] = seed;
    j["tool_version"] = SGSEQ_VERSION;
    Json files = Json::array();
    for (const auto &f : inputs) {
        files.push_back({{"path", f.path}, {"fnv1a64", f.hash}});
    }
    j["input_files"] = files;
    j["timestamp"] = utc_timestamp();
    return j;
}

std::string read_input(const std::string &path) {
    if (!fs::exists(path)) {
        throw CliError(kExitNoInput, "no such file: " + path);
    }
    try {
        return read_file(path);
    } catch (const std::exception &e) {
        throw CliError(kExitNoInput, e.what());
    }
}

void write_output(const std::string &path, std::string_view content) {
    try {
        write_file_atomic(path, content);
    } catch (const std::exception &e) {
        throw CliError(kExitCantCreate, e.what());
    }
}

std::complex<double> parse_complex(std::string_view token) {
    std::string s;
    for (char c : token) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    if (s.empty()) {
        throw std::invalid_argument("empty complex literal");
    }
    auto parse_real = [&](const std::string &text) {
        if (text.empty() || text == "+") {
            return 1.0;
        }
        if (text == "-") {
            return -1.0;
        }
        std::size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument("bad number '" + text + "'");
        }
        return v;
    };
    try {
        if (s.back() != 'i' && s.back() != 'j') {
            return {parse_real(s), 0.0};
        }
        const std::string body = s.substr(0, s.size() - 1);
        // Split at the last sign that is not part of an exponent.
        std::size_t split = std::string::npos;
        for (std::size_t k = body.size(); k-- > 1;) {
            if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        if (split == std::string::npos) {
            return {0.0, parse_real(body)};
        }
        return {parse_real(body.substr(0, split)), parse_real(body.substr(split))};
    } catch (const std::logic_error &) {
        throw std::invalid_argument("malformed complex number '" + std::string(token) + "'");
    }
}

std::uint64_t file_hash(const std::string &content) { return fnv1a64(content); }

struct ExperimentOptions {
    std::string order;
    std::string params_file;
    bool reference = false;
    std::uint64_t shots = 8192;
    std::uint64_t seed = 0;
    std::string input = "1,0";
    std::string out = "report.json";
    std::string csv;
    std::string circuit_out;
    std::size_t n_half = 3;
    std::size_t layers = 3;
    // delayed only
    std::string mode = "midcircuit";
    double p_choice = 0.5;
    bool analytic = false;
};

void add_experiment_options(CLI::App *cmd, ExperimentOptions &o) {
    auto *params = cmd->add_option("--params", o.params_file, "Calibrated ParamSet JSON");
    auto *ref = cmd->add_flag("--reference", o.reference, "Use ideal reference-cat devices");
    params->excludes(ref);
    cmd->add_option("--shots", o.shots, "Number of shots")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
    cmd->add_option("--input", o.input, "System input amplitudes a,b")->capture_default_str();
    cmd->add_option("--out", o.out, "Report JSON path")->capture_default_str();
    cmd->add_option("--csv", o.csv, "Optional histogram CSV path");
    cmd->add_option("--circuit-out", o.circuit_out, "Optional composed-circuit JSON path");
    cmd->add_option("--n-probes-half", o.n_half, "N for reference runs (probes per arm = 2N)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

/// Resolves flags into a validated config plus the files it read.
std::pair<ExperimentConfig, std::vector<InputFile>> resolve(const ExperimentOptions &o,
                                                            Order order) {
    if (!o.reference && o.params_file.empty()) {
        throw CliError(kExitUsage, "one of --params FILE or --reference is required");
    }
    ExperimentConfig config;
    config.order = order;
    config.shots = o.shots;
    config.seed = o.seed;
    std::vector<InputFile> inputs;
    if (o.reference) {
        config.N = o.n_half;
        config.m = o.layers;
    } else {
        const std::string text = read_input(o.params_file);
        try {
            config.params = param_set_from_json(parse_json(text));
        } catch (const FormatError &e) {
            throw CliError(kExitDataError, o.params_file + ": " + e.what());
        }
        config.N = config.params->N;
        config.m = config.params->m;
        inputs.push_back({o.params_file, hex64(file_hash(text))});
    }
    try {
        std::tie(config.a, config.b) = parse_input_pair(o.input);
        config.validate();
    } catch (const std::invalid_argument &e) {
        throw CliError(kExitUsage, e.what());
    }
    return {config, inputs};
}

Json options_json(const ExperimentOptions &o, const ExperimentConfig &config) {
    Json j = to_json(config);
    j["params_file"] = o.params_file.empty() ? Json(nullptr) : Json(o.params_file);
    return j;
}

void write_experiment(const Context &ctx, std::string_view command, const ExperimentOptions &o,
                      const ExperimentConfig &config, const std::vector<InputFile> &inputs,
                      const ExperimentReport &report, const Circuit &circuit,
                      const Json &extra = Json()) {
    Json doc;
    doc["manifest"] = manifest(ctx, command, options_json(o, config), config.seed, inputs);
    const Json body = to_json(report);
    for (const auto &[key, value] : body.items()) {
        doc[key] = value;
    }
    if (!extra.is_null()) {
        for (const auto &[key, value] : extra.items()) {
            doc[key] = value;
        }
    }
    write_output(o.out, dump(doc));
    if (!o.csv.empty()) {
        write_output(o.csv, histogram_csv(report.raw));
    }
    if (!o.circuit_out.empty()) {
        write_output(o.circuit_out, dump(to_json(circuit)));
    }
}

void print_summary(std::ostream &out, const ExperimentReport &r) {
    const auto f = frequencies(r.sampled);
    out << to_string(r.kind) << ": shots=" << r.sampled.total << " P(qs=1)=" << f.system[1]
        << " z{Zero,One,Amb}={" << f.z_collective[0] << "," << f.z_collective[1] << ","
        << f.z_collective[2] << "} x{Plus,Minus,Amb}={" << f.x_collective[0] << ","
        << f.x_collective[1] << "," << f.x_collective[2] << "}";
    if (!r.x_readout || r.kind == ExperimentKind::DelayedChoice) {
        out << " parity{Even,Odd}={" << f.parity[0] << "," << f.parity[1] << "}";
    }
    out << "\n";
}

int cmd_calibrate(const Context &ctx, std::size_t n_half, std::size_t layers,
                  std::size_t restarts, std::uint64_t seed, double tol, std::size_t max_iters,
                  std::optional<double> threshold, const std::string &basis,
                  const std::string &out_path, std::string report_path) {
    CalibrationOptions opt;
    opt.N = n_half;
    opt.m = layers;
    opt.restarts = restarts;
    opt.seed = seed;
    opt.tolerance = tol;
    opt.max_iters = max_iters;
    opt.basis = basis == "x" ? Basis::X : Basis::Z;
    const CalibrationReport report = minimize(opt);
    const double limit = threshold.value_or(report.threshold());

    if (report_path.empty()) {
        fs::path p(out_path);
        report_path = (p.parent_path() / (p.stem().string() + ".calib.json")).string();
    }
    Json config;
    config["n_probes_half"] = n_half;
    config["layers"] = layers;
    config["restarts"] = restarts;
    config["tol"] = tol;
    config["max_iters"] = max_iters;
    config["threshold"] = limit;
    config["basis"] = basis;

    Json doc;
    doc["manifest"] = manifest(ctx, "calibrate", config, seed, {});
    const Json body = to_json(report);
    for (const auto &[key, value] : body.items()) {
        doc[key] = value;
    }
    write_output(out_path, dump(to_json(report.best_params)));
    write_output(report_path, dump(doc));

    ctx.out << "best_cost=" << report.best_cost << " ground=" << report.ground_energy
            << " threshold=" << limit << " cat_fidelity=" << report.cat_fidelity_0 << "\n";
    if (report.best_cost > limit) {
        ctx.err << "warning: best cost " << report.best_cost << " is above threshold " << limit
                << "; retry with --layers " << layers + 1 << "\n";
        return kExitBelowThreshold;
    }
    return kExitOk;
}

int cmd_run(const Context &ctx, const ExperimentOptions &o) {
    auto [config, inputs] = resolve(o, o.order == "zx" ? Order::ZThenX : Order::XThenZ);
    const auto layout = make_cross_layout(config.N);
    const auto plan = plan_sequential(config, layout);
    const auto report = execute_plan(plan, ExperimentKind::Sequential, config);
    write_experiment(ctx, "run", o, config, inputs, report, plan.circuit);
    print_summary(ctx.out, report);
    return kExitOk;
}

void warn_if_uncalibrated(const Context &ctx, const ExperimentConfig &config) {
    if (!config.params) {
        return;
    }
    const double cost = calibration_cost(*config.params);
    const double limit = 0.9 * ground_energy(config.N);
    if (cost > limit) {
        ctx.err << "warning: params reach cost " << cost << " (threshold " << limit
                << "); parity conditioning is unreliable\n";
    }
}

int cmd_wigner(const Context &ctx, const ExperimentOptions &o) {
    auto [config, inputs] = resolve(o, Order::XThenZ);
    warn_if_uncalibrated(ctx, config);
    const auto layout = make_cross_layout(config.N);
    const auto plan = plan_wigner(config, layout);
    const auto report = execute_plan(plan, ExperimentKind::Wigner, config);
    write_experiment(ctx, "wigner", o, config, inputs, report, plan.circuit);
    print_summary(ctx.out, report);
    return kExitOk;
}

int cmd_delayed(const Context &ctx, const ExperimentOptions &o) {
    if (!(o.p_choice >= 0.0 && o.p_choice <= 1.0)) {
        throw CliError(kExitUsage, "--p-choice must lie in [0, 1]");
    }
    auto [config, inputs] = resolve(o, Order::XThenZ);
    warn_if_uncalibrated(ctx, config);
    const auto layout = make_cross_layout(config.N);
    const DelayedMode mode = o.mode == "deferred" ? DelayedMode::Deferred : DelayedMode::MidCircuit;
    const auto plan = plan_delayed_choice(config, layout, mode, o.p_choice);
    auto report = execute_plan(plan, ExperimentKind::DelayedChoice, config);
    report.mode = mode;
    report.p_choice = o.p_choice;

    Json extra;
    if (o.analytic) {
        const auto eq = delayed_choice_equivalence(config, layout, o.p_choice);
        Json summary;
        summary["max_branch_tvd"] = eq.mode_tvd;
        summary["max_abs_diff"] = eq.mode_max_abs_diff;
        summary["which_way_vs_sequential_tvd"] =
            eq.which_way_tvd ? Json(*eq.which_way_tvd) : Json(nullptr);
        summary["interference_vs_wigner_tvd"] =
            eq.interference_tvd ? Json(*eq.interference_tvd) : Json(nullptr);
        extra["branch_equivalence"] = summary;
        ctx.out << "max_branch_tvd=" << eq.mode_tvd << "\n";
    }
    write_experiment(ctx, "delayed", o, config, inputs, report, plan.circuit, extra);
    print_summary(ctx.out, report);
    return kExitOk;
}

int cmd_validate(const Context &ctx, const std::string &circuit_path, std::size_t n_half) {
    const std::string text = read_input(circuit_path);
    const auto layout = make_cross_layout(n_half);
    const bool blank = std::all_of(text.begin(), text.end(),
                                   [](unsigned char c) { return std::isspace(c) != 0; });
    if (blank) {
        ctx.out << "legal: empty circuit\n";
        return kExitOk;
    }
    Circuit circuit(1);
    try {
        circuit = circuit_from_json(parse_json(text));
    } catch (const FormatError &e) {
        throw CliError(kExitDataError, circuit_path + ": " + e.what());
    }
    const auto report = validate_nearest_neighbor(circuit, layout);
    for (const auto &v : report.violations) {
        ctx.out << "violation: op " << v.op_index << " " << to_string(v.gate.kind) << "("
                << v.gate.targets[0] << ", " << v.gate.targets[1] << ")\n";
    }
    ctx.out << (report.legal() ? "legal" : "illegal") << ": " << report.violations.size()
            << " violation(s) in " << circuit.size() << " ops\n";
    return report.legal() ? kExitOk : kExitViolations;
}

int cmd_replay(const Context &ctx, const std::string &report_path, const std::string &out_path) {
    const std::string text = read_input(report_path);
    Json doc;
    try {
        doc = parse_json(text);
    } catch (const FormatError &e) {
        throw CliError(kExitDataError, report_path + ": " + e.what());
    }
    std::vector<std::string> argv;
    try {
        argv = doc.at("manifest").at("argv").get<std::vector<std::string>>();
    } catch (const Json::exception &) {
        throw CliError(kExitDataError, report_path + ": no usable manifest argv");
    }
    if (!argv.empty() && argv.front() == "replay") {
        throw CliError(kExitDataError, "refusing to replay a replay");
    }
    std::vector<std::string> replay = recorded_argv(argv);
    replay.push_back("--out");
    replay.push_back(out_path);
    return run(replay, ctx.out, ctx.err);
}

} // namespace

std::pair<std::complex<double>, std::complex<double>> parse_input_pair(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
        throw std::invalid_argument("--input expects 'a,b', got '" + std::string(text) + "'");
    }
    auto a = parse_complex(text.substr(0, comma));
    auto b = parse_complex(text.substr(comma + 1));
    const double norm2 = std::norm(a) + std::norm(b);
    if (std::abs(norm2 - 1.0) > 1e-6) {
        throw std::invalid_argument("--input amplitudes have |a|^2 + |b|^2 = " +
                                    std::to_string(norm2) + ", expected 1");
    }
    const double scale = 1.0 / std::sqrt(norm2);
    return {a * scale, b * scale};
}

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    Context ctx{args, out, err};
    CLI::App app{"Sequential Stern-Gerlach circuit simulator", "sgseq"};
    app.require_subcommand(1);
    app.set_version_flag("--version", SGSEQ_VERSION);

    // calibrate
    std::size_t cal_n = 3;
    std::size_t cal_m = 3;
    std::size_t cal_restarts = 20;
    std::uint64_t cal_seed = 0;
    double cal_tol = 1e-6;
    std::size_t cal_max_iters = 2000;
    std::optional<double> cal_threshold;
    std::string cal_basis = "z";
    std::string cal_out = "params.json";
    std::string cal_report;
    auto *calibrate = app.add_subcommand("calibrate", "Variationally calibrate an S-G device");
    calibrate->add_option("--n-probes-half", cal_n, "N (2N probes)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    calibrate->add_option("--layers", cal_m, "Layer count m")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    calibrate->add_option("--restarts", cal_restarts, "Random restarts")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    calibrate->add_option("--seed", cal_seed, "Seed")->capture_default_str();
    calibrate->add_option("--tol", cal_tol, "Simplex spread tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    calibrate->add_option("--max-iters", cal_max_iters, "Iterations per restart")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    calibrate->add_option("--threshold", cal_threshold,
                          "Acceptance cost (default 0.9 x ground energy)");
    calibrate->add_option("--basis", cal_basis, "Device basis to calibrate")
        ->check(CLI::IsMember({"z", "x"}))
        ->capture_default_str();
    calibrate->add_option("--out", cal_out, "ParamSet JSON path")->capture_default_str();
    calibrate->add_option("--report", cal_report,
                          "CalibrationReport JSON path (default <out>.calib.json)");

    ExperimentOptions run_opt;
    auto *run_cmd = app.add_subcommand("run", "Sequential S-G measurement");
    run_cmd->add_option("--order", run_opt.order, "zx: Z device first; xz: X device first")
        ->required()
        ->check(CLI::IsMember({"zx", "xz"}));
    add_experiment_options(run_cmd, run_opt);

    ExperimentOptions wig_opt;
    auto *wigner = app.add_subcommand("wigner", "Wigner S-G interferometer (parity readout)");
    add_experiment_options(wigner, wig_opt);

    ExperimentOptions del_opt;
    auto *delayed = app.add_subcommand("delayed", "Delayed-choice readout via an ancilla");
    add_experiment_options(delayed, del_opt);
    delayed->add_option("--mode", del_opt.mode, "midcircuit or deferred")
        ->check(CLI::IsMember({"midcircuit", "deferred"}))
        ->capture_default_str();
    delayed->add_option("--p-choice", del_opt.p_choice, "Probability of which-way readout")
        ->capture_default_str();
    delayed->add_flag("--analytic", del_opt.analytic,
                      "Add the analytic branch-equivalence summary");

    std::string val_circuit;
    std::size_t val_n = 3;
    auto *validate = app.add_subcommand("validate", "Check nearest-neighbour legality");
    validate->add_option("--circuit", val_circuit, "Circuit JSON")->required();
    validate->add_option("--n-probes-half", val_n, "Cross layout N")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::string replay_report;
    std::string replay_out;
    auto *replay = app.add_subcommand("replay", "Re-run the command recorded in a manifest");
    replay->add_option("report", replay_report, "Report or calibration JSON")->required();
    replay->add_option("--out", replay_out, "Output path")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*calibrate) {
            return cmd_calibrate(ctx, cal_n, cal_m, cal_restarts, cal_seed, cal_tol,
                                 cal_max_iters, cal_threshold, cal_basis, cal_out, cal_report);
        }
        if (*run_cmd) {
            return cmd_run(ctx, run_opt);
        }
        if (*wigner) {
            return cmd_wigner(ctx, wig_opt);
        }
        if (*delayed) {
            return cmd_delayed(ctx, del_opt);
        }
        if (*validate) {
            return cmd_validate(ctx, val_circuit, val_n);
        }
        if (*replay) {
            return cmd_replay(ctx, replay_report, replay_out);
        }
    } catch (const CliError &e) {
        err << "sgseq: " << e.what() << "\n";
        return e.code();
    } catch (const std::invalid_argument &e) {
        err << "sgseq: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "sgseq: internal error: " << e.what() << "\n";
        return kExitSoftware;
    }
    return kExitUsage;
}

} // namespace sgseq::cli
