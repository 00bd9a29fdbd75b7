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

#include "fbsim/distinguishability.hpp"

#include <cmath>
#include <string>

namespace fbsim {

Distinguishability::Distinguishability(double r) : r_(r) {
  if (!(r >= 0.0 && r <= 1.0)) {
    throw Error("distinguishability parameter r must lie in [0, 1], got " +
                std::to_string(r));
  }
}

PairInput inject_pair(int path_1, int path_2, Distinguishability overlap,
                      Statistics stats, int n_paths) {
  if (path_1 < 0 || path_1 >= n_paths || path_2 < 0 || path_2 >= n_paths) {
    throw Error("pair input paths must lie inside the " +
                std::to_string(n_paths) + "-path network");
  }
  const double r = overlap.r();
  if (stats == Statistics::Fermion && path_1 == path_2 && r == 1.0) {
    throw PauliExclusionError(
        "two indistinguishable fermions cannot enter on one path");
  }

  const Mode first{path_1, 0};
  State state(stats);
  const double parallel = std::sqrt(r);
  const double orthogonal = std::sqrt(1.0 - r);
  if (parallel > 0.0) {
    Monomial term{Complex{parallel, 0.0}, {first, Mode{path_2, 0}}};
    state += monomial_to_state(normal_order(term, stats), stats);
  }
  if (orthogonal > 0.0) {
    Monomial term{Complex{orthogonal, 0.0}, {first, Mode{path_2, 1}}};
    state += monomial_to_state(normal_order(term, stats), stats);
  }
  state.prune();

  const double raw_norm = state.norm();
  return PairInput{state.normalized(), raw_norm};
}

DetectionDistribution trace_labels(const State& state, int n_paths) {
  DetectionDistribution::Outcomes outcomes;
  for (const auto& [ket, amplitude] : state.terms()) {
    outcomes[ket.path_pattern(n_paths)] += std::norm(amplitude);
  }
  return DetectionDistribution(std::move(outcomes));
}

}  // namespace fbsim
