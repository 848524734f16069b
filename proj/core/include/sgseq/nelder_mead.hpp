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
#include <functional>
#include <span>
#include <vector>

namespace sgseq {

struct NelderMeadOptions {
    /// Stop once max_i |f(x_i) - f(x_best)| over the simplex drops below this.
    double tolerance = 1e-6;
    std::size_t max_iters = 2000;
    /// Offset of the initial simplex vertices along each coordinate.
    double initial_step = 0.5;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    std::size_t iterations = 0;
    std::size_t evaluations = 0;
    bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

/// Called once per iteration with the current best vertex value.
using IterationCallback = std::function<void(std::size_t iteration, double best)>;

/// Nelder-Mead downhill simplex (standard coefficients 1, 2, 0.5, 0.5).
[[nodiscard]] NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0,
                                           const NelderMeadOptions &options = {},
                                           const IterationCallback &on_iteration = {});

} // namespace sgseq
