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

#include "sgseq/sampling.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "gtest/gtest.h"

#include "sgseq/parallel.hpp"

using namespace sgseq;

namespace {

class ScopedThreads {
  public:
    explicit ScopedThreads(const char *value) {
        if (const char *old = std::getenv("SG_SEQ_THREADS")) {
            saved_ = old;
        }
        setenv("SG_SEQ_THREADS", value, 1);
    }
    ~ScopedThreads() {
        if (saved_.empty()) {
            unsetenv("SG_SEQ_THREADS");
        } else {
            setenv("SG_SEQ_THREADS", saved_.c_str(), 1);
        }
    }

  private:
    std::string saved_;
};

} // namespace

TEST(ShotHistogram, counts_and_bitstrings) {
    ShotHistogram h(3);
    h.add(0b101, 4);
    h.add(0b001);
    h.add(0b101);
    ASSERT_EQ(h.shots(), 6u);
    ASSERT_EQ(h.count(0b101), 5u);
    ASSERT_EQ(h.count("001"), 1u);
    ASSERT_EQ(h.count(0b111), 0u);
    ASSERT_EQ(h.bitstring(0b001), "001");
    ASSERT_THROW(h.add(8), std::out_of_range);
    ASSERT_THROW((void)h.count("01"), std::invalid_argument);
}

TEST(ShotHistogram, sorted_rows_order_by_count_then_bitstring) {
    ShotHistogram h(2);
    h.add(0b11, 2);
    h.add(0b00, 5);
    h.add(0b01, 2);
    const auto rows = h.sorted_rows();
    ASSERT_EQ(rows.size(), 3u);
    ASSERT_EQ(rows[0], (std::pair<std::string, std::uint64_t>{"00", 5}));
    ASSERT_EQ(rows[1].first, "01");
    ASSERT_EQ(rows[2].first, "11");
}

TEST(ShotHistogram, merge) {
    ShotHistogram a(2);
    ShotHistogram b(2);
    a.add(1, 3);
    b.add(1, 2);
    b.add(2, 1);
    a.merge(b);
    ASSERT_EQ(a.shots(), 6u);
    ASSERT_EQ(a.count(1), 5u);
    ASSERT_THROW(a.merge(ShotHistogram(3)), std::invalid_argument);
}

TEST(Sampling, frequencies_track_probabilities) {
    const std::vector<double> p{0.1, 0.2, 0.3, 0.4};
    Rng rng(123);
    const std::uint64_t shots = 20000;
    const auto h = sample_distribution(p, 2, shots, rng);
    ASSERT_EQ(h.shots(), shots);
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double sigma = std::sqrt(p[k] * (1 - p[k]) / shots);
        ASSERT_NEAR(static_cast<double>(h.count(k)) / shots, p[k], 4 * sigma) << k;
    }
}

TEST(Sampling, zero_probability_outcomes_never_appear) {
    const std::vector<double> p{0.5, 0.0, 0.0, 0.5};
    Rng rng(7);
    const auto h = sample_distribution(p, 2, 5000, rng);
    ASSERT_EQ(h.count(1), 0u);
    ASSERT_EQ(h.count(2), 0u);
}

TEST(Sampling, rejects_bad_requests) {
    Rng rng(0);
    const std::vector<double> p{1.0, 0.0};
    ASSERT_THROW((void)sample_distribution(p, 1, 0, rng), std::invalid_argument);
    ASSERT_THROW((void)sample_distribution(p, 2, 10, rng), std::invalid_argument);
    const std::vector<double> z{0.0, 0.0};
    ASSERT_THROW((void)sample_distribution(z, 1, 10, rng), std::invalid_argument);
}

TEST(Sampling, same_seed_same_histogram_for_any_thread_count) {
    const auto state = StateVector::from_amplitudes({0.5, 0.5, Complex(0.0, 0.5), -0.5});
    ShotHistogram one;
    ShotHistogram many;
    {
        ScopedThreads t("1");
        Rng rng(99);
        one = sample_shots(state, 10000, rng);
    }
    {
        ScopedThreads t("5");
        ASSERT_EQ(worker_threads(), 5u);
        Rng rng(99);
        many = sample_shots(state, 10000, rng);
    }
    ASSERT_EQ(one, many);
    Rng other(100);
    ASSERT_NE(sample_shots(state, 10000, other), one);
}

TEST(Sampling, circuit_sampling_uses_measurement_branches) {
    Circuit c(2);
    c.append(GateOp::hadamard(0));
    const auto bit = c.measure(0);
    c.append_conditioned(GateOp::cnot(0, 1), bit);
    Rng rng(4);
    const auto h = sample_circuit(StateVector(2), c, 4096, rng);
    ASSERT_EQ(h.count(0b00) + h.count(0b11), 4096u);
    ASSERT_NEAR(h.count(0b11) / 4096.0, 0.5, 4 * std::sqrt(0.25 / 4096));
}
