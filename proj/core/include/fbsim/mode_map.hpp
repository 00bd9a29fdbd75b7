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

#include <numbers>
#include <vector>

#include "fbsim/fock.hpp"

namespace fbsim {

/// Unitary linear map on creation operators. Entry (j, i) is the
/// coefficient of output operator j in the image of input operator i, so a
/// state passes through the element by substituting each input operator
/// with its column expansion.
class ModeMap {
 public:
  /// Identity map on `dim` paths.
  explicit ModeMap(int dim);

  /// Builds from a row-major matrix, rejecting non-unitary input.
  static ModeMap from_matrix(std::vector<Complex> row_major, int dim);

  int dim() const { return dim_; }
  Complex at(int row, int col) const {
    return entries_[static_cast<size_t>(row * dim_ + col)];
  }

  ModeMap adjoint() const;
  bool is_unitary(double tol = kAmplitudeTolerance) const;

 private:
  ModeMap(int dim, std::vector<Complex> entries)
      : dim_(dim), entries_(std::move(entries)) {}

  friend ModeMap beamsplitter(double, int, int, int);
  friend ModeMap phase_shift(double, int, int);
  friend ModeMap compose(const ModeMap&, const ModeMap&);
  friend ModeMap lift_over_labels(const ModeMap&, int);

  int dim_;
  std::vector<Complex> entries_;  // row-major
};

/// Beamsplitter angle giving equal transmission and reflection, the only
/// setting the catalog scenarios use.
inline constexpr double FIFTY_FIFTY = std::numbers::pi / 4.0;

/// Rotation-form beamsplitter between two paths: the (path_a, path_b)
/// block is [[cos t, -sin t], [sin t, cos t]], identity elsewhere. At
/// theta = FIFTY_FIFTY the block is (1/sqrt(2))[[1, -1], [1, 1]].
ModeMap beamsplitter(double theta, int path_a, int path_b, int n_paths);

/// Multiplies one path's creation operator by e^{i phi}.
ModeMap phase_shift(double phi, int path, int n_paths);

/// Matrix product later * earlier: the map that applies `earlier` first.
ModeMap compose(const ModeMap& later, const ModeMap& earlier);

/// Passes a state through the map: every creation operator on (path p,
/// label l) is replaced by sum_q map(q, p) x (path q, label l), the
/// operator polynomial is expanded, normal-ordered, and turned back into a
/// state. Internal labels are spectators. The map dimension must cover
/// every path the state occupies.
State apply(const ModeMap& map, const State& state);

}  // namespace fbsim
