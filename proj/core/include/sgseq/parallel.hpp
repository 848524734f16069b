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

namespace sgseq {

/// Worker count: SG_SEQ_THREADS when set to a positive integer, otherwise
/// std::thread::hardware_concurrency() (at least 1).
[[nodiscard]] std::size_t worker_threads();

/// Runs body(i) for i in [0, count) on up to `threads` threads. Work items
/// are claimed dynamically; callers must make each item independent.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)> &body);

} // namespace sgseq
