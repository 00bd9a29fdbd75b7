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

#include "fbsim/detection.hpp"
#include "fbsim/fock.hpp"

namespace fbsim {

/// Overlap parameter between two particles: 1 means indistinguishable,
/// 0 means perfectly distinguishable. The second particle's creation
/// operator decomposes as sqrt(r) along the first particle's internal mode
/// plus sqrt(1-r) along an orthogonal one; both weights are non-negative
/// real.
class Distinguishability {
 public:
  explicit Distinguishability(double r);

  double r() const { return r_; }

 private:
  double r_;
};

/// The normalized two-particle input from inject_pair, plus the norm the
/// raw operator product had before renormalization. The raw norm moves away
/// from 1 only when both particles enter on one path: bosonic bunching
/// grows it to sqrt(1+r), fermionic antisymmetrization shrinks it to
/// sqrt(1-r).
struct PairInput {
  State state;
  double raw_norm = 1.0;

  bool renormalized(double tol = kAmplitudeTolerance) const {
    return raw_norm < 1.0 - tol || raw_norm > 1.0 + tol;
  }
};

/// Two-particle input state: particle 1 on (path_1, label 0), particle 2 on
/// path_2 with internal component sqrt(r) along label 0 and sqrt(1-r) along
/// label 1. Fermions on one path with r = 1 are Pauli-excluded.
PairInput inject_pair(int path_1, int path_2, Distinguishability overlap,
                      Statistics stats, int n_paths);

/// Path-resolved, label-blind detection: each pattern's probability is the
/// summed |amplitude|^2 of every label-resolved ket consistent with it.
DetectionDistribution trace_labels(const State& state, int n_paths);

}  // namespace fbsim
