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

/// @file
/// Umbrella header for the sgseq core library.
#pragma once

#include "sgseq/ansatz.hpp"
#include "sgseq/calibration.hpp"
#include "sgseq/circuit.hpp"
#include "sgseq/decode.hpp"
#include "sgseq/dense_oracle.hpp"
#include "sgseq/experiments.hpp"
#include "sgseq/gate.hpp"
#include "sgseq/layout.hpp"
#include "sgseq/nelder_mead.hpp"
#include "sgseq/parallel.hpp"
#include "sgseq/random.hpp"
#include "sgseq/sampling.hpp"
#include "sgseq/serialization.hpp"
#include "sgseq/simulator.hpp"
#include "sgseq/state_vector.hpp"
