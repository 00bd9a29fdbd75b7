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

#include <map>
#include <string>
#include <vector>

#include "fbsim/tolerances.hpp"

namespace fbsim {

/// Probability per path-occupation pattern, internal labels traced out.
/// Detectors resolve paths only, so label-distinct outcomes add in
/// probability. The total is 1 for a normalized state and 0 for the zero
/// state.
class DetectionDistribution {
 public:
  using Outcomes = std::map<std::vector<int>, double>;

  DetectionDistribution() = default;
  explicit DetectionDistribution(Outcomes outcomes);

  const Outcomes& outcomes() const { return outcomes_; }
  double total() const { return total_; }

  /// Probability of a pattern, 0 when absent.
  double probability(const std::vector<int>& pattern) const;

  /// Compares probabilities over the union of patterns.
  bool approx_equal(const DetectionDistribution& other,
                    double tol = kAmplitudeTolerance) const;

 private:
  Outcomes outcomes_;
  double total_ = 0.0;
};

/// "n0|n1|..." rendering of a path-occupation pattern.
std::string pattern_string(const std::vector<int>& pattern);

}  // namespace fbsim
