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

#include "sgseq/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace sgseq;
using namespace sgseq::testing;

namespace {

/// Ising cost of the one-layer N=1 device evaluated with textbook operators.
double oracle_cost_n1_m1(double gamma, double beta) {
    std::vector<Complex> v(8, 0.0);
    v[0] = 1.0;
    const std::vector<GateOp> program{
        GateOp::hadamard(0),       GateOp::hadamard(2),       GateOp::zz(0, 1, gamma),
        GateOp::zz(1, 2, gamma),   GateOp::rot_x(0, beta),    GateOp::rot_x(2, beta),
    };
    for (const auto &g : program) {
        v = mat_apply(reference_operator(g, 3), v);
    }
    double cost = 0.0;
    for (std::size_t k = 0; k < 8; ++k) {
        const int z0 = (k & 1) ? -1 : 1;
        const int z1 = (k & 2) ? -1 : 1;
        const int z2 = (k & 4) ? -1 : 1;
        cost -= std::norm(v[k]) * (z0 * z1 + z1 * z2);
    }
    return cost;
}

ParamSet random_params(std::size_t N, std::size_t m, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    ParamSet p = ParamSet::zeros(N, m);
    for (auto &g : p.gamma) {
        g = angle(rng);
    }
    for (auto &b : p.beta) {
        b = angle(rng);
    }
    return p;
}

} // namespace

TEST(Calibration, ground_energy) {
    ASSERT_EQ(ground_energy(1), -2.0);
    ASSERT_EQ(ground_energy(3), -6.0);
}

TEST(Calibration, cost_matches_textbook_evaluation) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_params(1, 1, rng);
        ASSERT_NEAR(calibration_cost(p), oracle_cost_n1_m1(p.gamma[0], p.beta[0]), 1e-12);
    }
}

TEST(Calibration, optimizer_matches_grid_search_n1_m1) {
    double grid_best = 1e300;
    const int steps = 200;
    for (int i = 0; i < steps; ++i) {
        for (int j = 0; j < steps; ++j) {
            grid_best = std::min(grid_best, oracle_cost_n1_m1(i * kPi / steps, j * kPi / steps));
        }
    }
    CalibrationOptions opt;
    opt.N = 1;
    opt.m = 1;
    opt.seed = 5;
    const auto report = minimize(opt);
    ASSERT_NEAR(report.best_cost, grid_best, 1e-3);
    ASSERT_GE(report.best_cost, ground_energy(1) - 1e-12);
}

TEST(Calibration, variational_bound_holds) {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t N = 1 + trial % 3;
        const auto p = random_params(N, 1 + trial % 4, rng);
        ASSERT_GE(calibration_cost(p), ground_energy(N) - 1e-12);
        ASSERT_LE(calibration_cost(p), -ground_energy(N) + 1e-12);
    }
}

TEST(Calibration, cost_bounds_weight_outside_the_ground_space) {
    // One domain wall costs 2 on the open chain, so the weight w on
    // {|0...0>, |1...1>} obeys 1 - w <= (cost - ground) / 2.
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const auto p = random_params(2, 2, rng);
        const auto s = device_output(p, 1.0, 0.0);
        const double w = std::norm(s[0]) + std::norm(s[s.size() - 1]);
        ASSERT_LE(1.0 - w, (calibration_cost(p) - ground_energy(2)) / 2.0 + 1e-12);
    }
}

TEST(Calibration, n3_m3_reaches_threshold_with_high_fidelity) {
    CalibrationOptions opt;
    opt.seed = 0;
    const auto report = minimize(opt);
    ASSERT_LE(report.best_cost, 0.9 * ground_energy(3));
    ASSERT_TRUE(report.accepted());
    ASSERT_TRUE(report.recommendation().empty());
    ASSERT_GT(report.cat_fidelity_0, 0.99);
    ASSERT_GT(report.cat_fidelity_plus, 0.99);
    ASSERT_EQ(report.restart_costs.size(), 20u);
    ASSERT_EQ(*std::min_element(report.restart_costs.begin(), report.restart_costs.end()),
              report.best_cost);
    ASSERT_NEAR(calibration_cost(report.best_params), report.best_cost, 1e-15);
}

TEST(Calibration, report_is_independent_of_thread_count) {
    CalibrationOptions opt;
    opt.N = 2;
    opt.m = 2;
    opt.restarts = 6;
    opt.seed = 17;
    opt.threads = 1;
    const auto serial = minimize(opt);
    opt.threads = 4;
    const auto threaded = minimize(opt);
    ASSERT_EQ(serial, threaded);
    opt.seed = 18;
    ASSERT_NE(minimize(opt).best_params, serial.best_params);
}

TEST(Calibration, trace_starts_each_restart_at_iteration_zero) {
    CalibrationOptions opt;
    opt.N = 1;
    opt.m = 1;
    opt.restarts = 3;
    const auto report = minimize(opt);
    std::size_t starts = 0;
    for (std::size_t k = 0; k < report.cost_trace.size(); ++k) {
        const auto &pt = report.cost_trace[k];
        if (pt.iteration == 0) {
            ++starts;
        } else {
            ASSERT_EQ(report.cost_trace[k - 1].restart, pt.restart);
            ASSERT_LE(pt.cost, report.cost_trace[k - 1].cost + 1e-15);
        }
    }
    ASSERT_EQ(starts, 3u);
}

TEST(Calibration, shallow_ansatz_recommends_more_layers) {
    CalibrationOptions opt;
    opt.N = 3;
    opt.m = 1;
    opt.restarts = 4;
    const auto report = minimize(opt);
    if (!report.accepted()) {
        ASSERT_NE(report.recommendation().find("--layers 2"), std::string::npos);
    }
    CalibrationReport fake;
    fake.ground_energy = -6.0;
    fake.best_cost = -1.0;
    fake.best_params = ParamSet::zeros(3, 3);
    ASSERT_FALSE(fake.accepted());
    ASSERT_NE(fake.recommendation().find("--layers 4"), std::string::npos);
}

TEST(Calibration, rejects_bad_options_and_inputs) {
    CalibrationOptions opt;
    opt.restarts = 0;
    ASSERT_THROW((void)minimize(opt), std::invalid_argument);
    ASSERT_THROW((void)cat_fidelity(ParamSet::zeros(1, 1), 1.0, 1.0), std::invalid_argument);
}

TEST(Calibration, cat_target_layout) {
    const auto t = cat_target(1, 0.6, 0.8);
    ASSERT_EQ(t.n_qubits(), 3u);
    ASSERT_EQ(t[0], Complex(0.6));
    ASSERT_EQ(t[7], Complex(0.8));
}
