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

#include "fbsim/oracle.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

namespace fbsim {

Complex permanent(const std::vector<std::vector<Complex>>& matrix) {
  const size_t n = matrix.size();
  for (const auto& row : matrix) {
    if (row.size() != n) throw Error("permanent needs a square matrix");
  }
  if (n > 12) {
    throw Error("permanent limited to dimension 12, got " +
                std::to_string(n));
  }
  if (n == 0) return Complex{1.0, 0.0};

  // Ryser: perm(A) = (-1)^n sum_{S != empty} (-1)^|S| prod_i sum_{j in S} a_ij
  Complex sum{0.0, 0.0};
  const uint32_t subsets = uint32_t{1} << n;
  for (uint32_t s = 1; s < subsets; ++s) {
    Complex product{1.0, 0.0};
    for (size_t i = 0; i < n; ++i) {
      Complex row_sum{0.0, 0.0};
      for (size_t j = 0; j < n; ++j) {
        if (s & (uint32_t{1} << j)) row_sum += matrix[i][j];
      }
      product *= row_sum;
    }
    const bool odd = (std::popcount(s) & 1u) != 0;
    sum += odd ? -product : product;
  }
  return (n % 2 != 0) ? -sum : sum;
}

Complex determinant(std::vector<std::vector<Complex>> matrix) {
  const size_t n = matrix.size();
  for (const auto& row : matrix) {
    if (row.size() != n) throw Error("determinant needs a square matrix");
  }
  if (n == 0) return Complex{1.0, 0.0};

  Complex det{1.0, 0.0};
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    for (size_t row = col + 1; row < n; ++row) {
      if (std::abs(matrix[row][col]) > std::abs(matrix[pivot][col])) {
        pivot = row;
      }
    }
    if (std::abs(matrix[pivot][col]) == 0.0) return Complex{0.0, 0.0};
    if (pivot != col) {
      std::swap(matrix[pivot], matrix[col]);
      det = -det;
    }
    det *= matrix[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      const Complex factor = matrix[row][col] / matrix[col][col];
      for (size_t k = col; k < n; ++k) {
        matrix[row][k] -= factor * matrix[col][k];
      }
    }
  }
  return det;
}

ModeMap lift_over_labels(const ModeMap& path_map, int n_labels) {
  if (n_labels <= 0) throw Error("need at least one internal label");
  const int paths = path_map.dim();
  const int dim = paths * n_labels;
  std::vector<Complex> entries(static_cast<size_t>(dim) *
                                   static_cast<size_t>(dim),
                               Complex{0.0, 0.0});
  for (int q = 0; q < paths; ++q) {
    for (int p = 0; p < paths; ++p) {
      for (int label = 0; label < n_labels; ++label) {
        entries[static_cast<size_t>((q * n_labels + label) * dim +
                                    (p * n_labels + label))] =
            path_map.at(q, p);
      }
    }
  }
  return ModeMap(dim, std::move(entries));
}

namespace {

// Flat composite index of a mode, validating it fits the query's space.
int flat_index(const Mode& mode, int n_labels, int dim) {
  if (mode.label < 0 || mode.label >= n_labels) {
    throw Error("mode label " + std::to_string(mode.label) +
                " outside the " + std::to_string(n_labels) + "-label space");
  }
  const int index = mode.path * n_labels + mode.label;
  if (mode.path < 0 || index >= dim) {
    throw Error("mode " + to_string(mode) +
                " outside the composite map dimension");
  }
  return index;
}

std::vector<int> pattern_indices(const Occupation& pattern, int n_labels,
                                 int dim, Statistics stats) {
  std::vector<int> indices;
  indices.reserve(static_cast<size_t>(pattern.total()));
  for (const auto& [mode, n] : pattern.counts()) {
    if (stats == Statistics::Fermion && n > 1) {
      throw PauliExclusionError("fermionic pattern occupies " +
                                to_string(mode) + " " + std::to_string(n) +
                                " times");
    }
    const int index = flat_index(mode, n_labels, dim);
    for (int k = 0; k < n; ++k) indices.push_back(index);
  }
  return indices;
}

double factorial_product(const Occupation& pattern) {
  double product = 1.0;
  for (const auto& [mode, n] : pattern.counts()) {
    for (int k = 2; k <= n; ++k) product *= static_cast<double>(k);
  }
  return product;
}

}  // namespace

Complex amplitude(const TransitionQuery& query, Statistics stats) {
  if (query.input.total() != query.output.total()) {
    throw Error("transition does not conserve particle number (" +
                std::to_string(query.input.total()) + " in, " +
                std::to_string(query.output.total()) + " out)");
  }
  const int dim = query.map.dim();
  const std::vector<int> cols =
      pattern_indices(query.input, query.n_labels, dim, stats);
  const std::vector<int> rows =
      pattern_indices(query.output, query.n_labels, dim, stats);

  const size_t n = cols.size();
  std::vector<std::vector<Complex>> sub(n, std::vector<Complex>(n));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) {
      sub[r][c] = query.map.at(rows[r], cols[c]);
    }
  }

  if (stats == Statistics::Fermion) return determinant(std::move(sub));
  const double normalization =
      std::sqrt(factorial_product(query.input) *
                factorial_product(query.output));
  return permanent(sub) / normalization;
}

}  // namespace fbsim
