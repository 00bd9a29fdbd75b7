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

#include "fbsim/detection.hpp"

#include <cmath>
#include <set>

namespace fbsim {

DetectionDistribution::DetectionDistribution(Outcomes outcomes)
    : outcomes_(std::move(outcomes)) {
  for (const auto& [pattern, p] : outcomes_) total_ += p;
}

double DetectionDistribution::probability(
    const std::vector<int>& pattern) const {
  auto it = outcomes_.find(pattern);
  return it == outcomes_.end() ? 0.0 : it->second;
}

bool DetectionDistribution::approx_equal(const DetectionDistribution& other,
                                         double tol) const {
  std::set<std::vector<int>> patterns;
  for (const auto& [pattern, p] : outcomes_) patterns.insert(pattern);
  for (const auto& [pattern, p] : other.outcomes_) patterns.insert(pattern);
  for (const auto& pattern : patterns) {
    if (std::abs(probability(pattern) - other.probability(pattern)) > tol) {
      return false;
    }
  }
  return true;
}

std::string pattern_string(const std::vector<int>& pattern) {
  std::string out;
  for (size_t i = 0; i < pattern.size(); ++i) {
    if (i > 0) out += "|";
    out += std::to_string(pattern[i]);
  }
  return out;
}

}  // namespace fbsim
