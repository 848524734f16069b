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

#include "sgseq/parallel.hpp"

#include <atomic>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

using namespace sgseq;

TEST(Parallel, visits_each_index_once) {
    for (std::size_t threads : {1u, 3u, 8u}) {
        std::vector<std::atomic<int>> hits(100);
        parallel_for(hits.size(), threads, [&](std::size_t i) { hits[i]++; });
        for (const auto &h : hits) {
            ASSERT_EQ(h.load(), 1);
        }
    }
}

TEST(Parallel, zero_work_is_fine) {
    parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(Parallel, propagates_exceptions) {
    ASSERT_THROW(parallel_for(10, 4,
                              [](std::size_t i) {
                                  if (i == 7) {
                                      throw std::runtime_error("boom");
                                  }
                              }),
                 std::runtime_error);
}

TEST(Parallel, worker_threads_is_positive) { ASSERT_GE(worker_threads(), 1u); }
