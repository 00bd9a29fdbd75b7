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

#include <vector>

#include "fbsim/fock.hpp"
#include "fbsim/mode_map.hpp"

namespace fbsim {

// Independent transition-amplitude computation from permanents (bosons) and
// determinants (fermions) of mode-map submatrices. Deliberately shares no
// code with the operator-expansion path it cross-checks.

/// Exact permanent by Ryser inclusion-exclusion, dimension <= 12.
/// perm of the empty matrix is 1.
Complex permanent(const std::vector<std::vector<Complex>>& matrix);

/// Determinant by Gaussian elimination with partial pivoting.
Complex determinant(std::vector<std::vector<Complex>> matrix);

/// Expands a map on paths to the composite (path x label) mode space,
/// acting identically on every label. Composite mode (p, l) sits at flat
/// index p * n_labels + l, preserving the canonical mode order.
ModeMap lift_over_labels(const ModeMap& path_map, int n_labels);

/// One transition: input and output occupation patterns over composite
/// modes, connected by a composite mode map with `n_labels` labels per
/// path. Particle number must be conserved.
struct TransitionQuery {
  ModeMap map;
  int n_labels = 1;
  Occupation input;
  Occupation output;
};

/// Transition amplitude <output| map |input>: the submatrix with columns
/// repeated per input occupation and rows per output occupation gives
/// perm / sqrt(prod n_in! prod n_out!) for bosons and the signed
/// determinant, rows and columns in canonical mode order, for fermions.
Complex amplitude(const TransitionQuery& query, Statistics stats);

}  // namespace fbsim
