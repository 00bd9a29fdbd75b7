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

#include "fbsim/circuit.hpp"

namespace fbsim {

ModeMap element_map(const Element& element, int n_paths) {
  return std::visit(
      [n_paths](const auto& el) -> ModeMap {
        using T = std::decay_t<decltype(el)>;
        if constexpr (std::is_same_v<T, Beamsplitter>) {
          return beamsplitter(el.theta, el.path_a, el.path_b, n_paths);
        } else {
          return phase_shift(el.phi, el.path, n_paths);
        }
      },
      element);
}

Circuit mzi(double phi, Statistics stats) {
  Circuit circuit;
  circuit.n_paths = 2;
  circuit.statistics = stats;
  circuit.elements = {Beamsplitter{FIFTY_FIFTY, 0, 1}, PhaseShift{phi, 1},
                      Beamsplitter{FIFTY_FIFTY, 0, 1}};
  return circuit;
}

State evaluate(const Circuit& circuit, const State& input) {
  if (input.statistics() != circuit.statistics) {
    throw Error("input statistics (" + to_string(input.statistics()) +
                ") do not match the circuit (" +
                to_string(circuit.statistics) + ")");
  }
  State state = input;
  for (const Element& element : circuit.elements) {
    state = apply(element_map(element, circuit.n_paths), state);
  }
  return state;
}

DetectionDistribution detect(const State& state, int n_paths) {
  return trace_labels(state, n_paths);
}

}  // namespace fbsim
