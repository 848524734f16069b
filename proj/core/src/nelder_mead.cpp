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

#include "sgseq/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sgseq {

NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0,
                             const NelderMeadOptions &options,
                             const IterationCallback &on_iteration) {
    const std::size_t dim = x0.size();
    if (dim == 0) {
        throw std::invalid_argument("nelder_mead needs at least one coordinate");
    }
    constexpr double kReflect = 1.0;
    constexpr double kExpand = 2.0;
    constexpr double kContract = 0.5;
    constexpr double kShrink = 0.5;

    NelderMeadResult result;
    auto eval = [&](const std::vector<double> &x) {
        ++result.evaluations;
        return f(x);
    };

    std::vector<std::vector<double>> simplex(dim + 1, x0);
    for (std::size_t i = 0; i < dim; ++i) {
        simplex[i + 1][i] += options.initial_step;
    }
    std::vector<double> values(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
        values[i] = eval(simplex[i]);
    }

    std::vector<std::size_t> order(dim + 1);
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        std::vector<std::vector<double>> s(dim + 1);
        std::vector<double> v(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) {
            s[i] = std::move(simplex[order[i]]);
            v[i] = values[order[i]];
        }
        simplex = std::move(s);
        values = std::move(v);
    };
    auto affine = [&](const std::vector<double> &from, const std::vector<double> &to, double t) {
        std::vector<double> out(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            out[i] = from[i] + t * (to[i] - from[i]);
        }
        return out;
    };

    sort_simplex();
    while (result.iterations < options.max_iters) {
        if (values.back() - values.front() < options.tolerance) {
            result.converged = true;
            break;
        }
        ++result.iterations;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                centroid[j] += simplex[i][j] / static_cast<double>(dim);
            }
        }
        const auto &worst = simplex.back();
        const auto reflected = affine(centroid, worst, -kReflect);
        const double fr = eval(reflected);

        if (fr < values.front()) {
            const auto expanded = affine(centroid, worst, -kExpand);
            const double fe = eval(expanded);
            if (fe < fr) {
                simplex.back() = expanded;
                values.back() = fe;
            } else {
                simplex.back() = reflected;
                values.back() = fr;
            }
        } else if (fr < values[dim - 1]) {
            simplex.back() = reflected;
            values.back() = fr;
        } else {
            const bool outside = fr < values.back();
            const auto contracted = outside ? affine(centroid, reflected, kContract)
                                            : affine(centroid, worst, kContract);
            const double fc = eval(contracted);
            if (fc < (outside ? fr : values.back())) {
                simplex.back() = contracted;
                values.back() = fc;
            } else {
                for (std::size_t i = 1; i <= dim; ++i) {
                    simplex[i] = affine(simplex.front(), simplex[i], kShrink);
                    values[i] = eval(simplex[i]);
                }
            }
        }
        sort_simplex();
        if (on_iteration) {
            on_iteration(result.iterations, values.front());
        }
    }
    if (!result.converged && values.back() - values.front() < options.tolerance) {
        result.converged = true;
    }
    result.x = simplex.front();
    result.value = values.front();
    return result;
}

} // namespace sgseq
