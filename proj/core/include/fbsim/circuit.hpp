// Copyright 2026 The fbsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <variant>
#include <vector>

#include "fbsim/detection.hpp"
#include "fbsim/distinguishability.hpp"
#include "fbsim/mode_map.hpp"

namespace fbsim {

struct Beamsplitter {
  double theta = FIFTY_FIFTY;
  int path_a = 0;
  int path_b = 1;
};

struct PhaseShift {
  double phi = 0.0;
  int path = 0;
};

using Element = std::variant<Beamsplitter, PhaseShift>;

/// Ordered sequence of network elements over n_paths paths; evaluation
/// applies them in sequence order.
struct Circuit {
  int n_paths = 2;
  std::vector<Element> elements;
  Statistics statistics = Statistics::Boson;
};

/// The mode map of a single element within an n_paths network.
ModeMap element_map(const Element& element, int n_paths);

/// Mach-Zehnder interferometer on two paths: 50:50 beamsplitter, phase phi
/// on the lower path, 50:50 beamsplitter. Mirrors contribute no phase.
Circuit mzi(double phi, Statistics stats);

/// Folds apply() over the circuit's elements. The input statistics must
/// match the circuit's.
State evaluate(const Circuit& circuit, const State& input);

/// Label-blind detection probabilities of a state over n_paths paths.
DetectionDistribution detect(const State& state, int n_paths);

}  // namespace fbsim
