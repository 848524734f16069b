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

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgseq::cli {

// sysexits-style exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitBelowThreshold = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitDataError = 65;
inline constexpr int kExitNoInput = 66;
inline constexpr int kExitSoftware = 70;
inline constexpr int kExitCantCreate = 73;

/// Entry point shared by main() and the tests. `args` excludes the program
/// name.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

/// Parses "a,b" where each side is a complex literal such as 1, -0.5,
/// 0.6+0.8i or 1i. Inputs within 1e-6 of unit norm are renormalized; others
/// throw std::invalid_argument.
std::pair<std::complex<double>, std::complex<double>> parse_input_pair(std::string_view text);

} // namespace sgseq::cli
