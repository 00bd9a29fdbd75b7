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

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "fbsim/circuit.hpp"

namespace fbsim {

/// One catalog entry: either a runnable (circuit, input, expected
/// distribution) triple, or a construction that must be Pauli-rejected.
struct Scenario {
  struct Prepared {
    Circuit circuit;
    State input;
    DetectionDistribution expected;
  };
  struct MustExclude {
    std::function<void()> construct;
  };

  std::string name;
  std::variant<Prepared, MustExclude> body;
};

/// Every beamsplitter and interferometer scenario with a closed-form
/// outcome: HOM bunching/antibunching, same-port inputs, Pauli exclusion,
/// partial distinguishability, and the MZI phase laws.
std::vector<Scenario> scenario_catalog();

struct ScenarioResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

ScenarioResult run_scenario(const Scenario& scenario);
std::vector<ScenarioResult> run_all_scenarios();

}  // namespace fbsim
