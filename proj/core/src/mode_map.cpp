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

#include "fbsim/mode_map.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

namespace fbsim {

namespace {

void check_path(int path, int n_paths, const char* what) {
  if (n_paths <= 0) throw Error("mode map needs at least one path");
  if (path < 0 || path >= n_paths) {
    throw Error(std::string(what) + " " + std::to_string(path) +
                " is outside the " + std::to_string(n_paths) +
                "-path network");
  }
}

}  // namespace

ModeMap::ModeMap(int dim) : dim_(dim) {
  if (dim <= 0) throw Error("mode map needs at least one path");
  entries_.assign(static_cast<size_t>(dim) * static_cast<size_t>(dim),
                  Complex{0.0, 0.0});
  for (int i = 0; i < dim; ++i) {
    entries_[static_cast<size_t>(i * dim + i)] = Complex{1.0, 0.0};
  }
}

ModeMap ModeMap::from_matrix(std::vector<Complex> row_major, int dim) {
  if (dim <= 0 ||
      row_major.size() != static_cast<size_t>(dim) * static_cast<size_t>(dim)) {
    throw Error("mode map matrix must be square with the stated dimension");
  }
  ModeMap map(dim, std::move(row_major));
  if (!map.is_unitary()) {
    throw Error("mode map matrix is not unitary");
  }
  return map;
}

ModeMap ModeMap::adjoint() const {
  std::vector<Complex> entries(entries_.size());
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      entries[static_cast<size_t>(c * dim_ + r)] = std::conj(at(r, c));
    }
  }
  return ModeMap(dim_, std::move(entries));
}

bool ModeMap::is_unitary(double tol) const {
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      Complex sum{0.0, 0.0};
      for (int k = 0; k < dim_; ++k) {
        sum += at(r, k) * std::conj(at(c, k));
      }
      const Complex expected =
          r == c ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      if (std::abs(sum - expected) > tol) return false;
    }
  }
  return true;
}

ModeMap beamsplitter(double theta, int path_a, int path_b, int n_paths) {
  check_path(path_a, n_paths, "beamsplitter path");
  check_path(path_b, n_paths, "beamsplitter path");
  if (path_a == path_b) {
    throw Error("beamsplitter paths must differ (got " +
                std::to_string(path_a) + " twice)");
  }
  ModeMap map(n_paths);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  map.entries_[static_cast<size_t>(path_a * n_paths + path_a)] = c;
  map.entries_[static_cast<size_t>(path_a * n_paths + path_b)] = -s;
  map.entries_[static_cast<size_t>(path_b * n_paths + path_a)] = s;
  map.entries_[static_cast<size_t>(path_b * n_paths + path_b)] = c;
  return map;
}

ModeMap phase_shift(double phi, int path, int n_paths) {
  check_path(path, n_paths, "phase-shift path");
  ModeMap map(n_paths);
  map.entries_[static_cast<size_t>(path * n_paths + path)] =
      std::polar(1.0, phi);
  return map;
}

ModeMap compose(const ModeMap& later, const ModeMap& earlier) {
  if (later.dim() != earlier.dim()) {
    throw Error("cannot compose mode maps of dimension " +
                std::to_string(later.dim()) + " and " +
                std::to_string(earlier.dim()));
  }
  const int dim = later.dim();
  std::vector<Complex> entries(static_cast<size_t>(dim) *
                               static_cast<size_t>(dim));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      Complex sum{0.0, 0.0};
      for (int k = 0; k < dim; ++k) sum += later.at(r, k) * earlier.at(k, c);
      entries[static_cast<size_t>(r * dim + c)] = sum;
    }
  }
  return ModeMap(dim, std::move(entries));
}

namespace {

// Distributes the substituted factor sums into individual monomials:
// picks one output path per factor slot, accumulating the coefficient, and
// normal-orders each complete product.
void expand(const ModeMap& map, const std::vector<Mode>& factors,
            size_t slot, Complex coefficient, std::vector<Mode>& chosen,
            Statistics stats, std::map<std::vector<Mode>, Complex>& poly) {
  if (std::abs(coefficient) == 0.0) return;
  if (slot == factors.size()) {
    Monomial ordered =
        normal_order(Monomial{coefficient, chosen}, stats);
    if (!ordered.is_zero()) poly[std::move(ordered.factors)] += ordered.coefficient;
    return;
  }
  const Mode in = factors[slot];
  for (int out = 0; out < map.dim(); ++out) {
    const Complex weight = map.at(out, in.path);
    if (std::abs(weight) == 0.0) continue;
    chosen.push_back(Mode{out, in.label});
    expand(map, factors, slot + 1, coefficient * weight, chosen, stats, poly);
    chosen.pop_back();
  }
}

}  // namespace

State apply(const ModeMap& map, const State& state) {
  if (state.max_path() >= map.dim()) {
    throw Error("state occupies path " + std::to_string(state.max_path()) +
                " beyond the map dimension " + std::to_string(map.dim()));
  }
  if (state.max_total_occupation() > kMaxParticles) {
    throw Error("state holds more than " + std::to_string(kMaxParticles) +
                " particles; expansion would be intractable");
  }

  const Statistics stats = state.statistics();
  std::map<std::vector<Mode>, Complex> poly;
  for (const auto& [ket, amplitude] : state.terms()) {
    // Undo the ket normalization so the term is a bare operator product.
    double weight = 1.0;
    for (const auto& [mode, n] : ket.counts()) {
      double factorial = 1.0;
      for (int k = 2; k <= n; ++k) factorial *= static_cast<double>(k);
      weight *= std::sqrt(factorial);
    }
    const std::vector<Mode> factors = ket.factors();
    std::vector<Mode> chosen;
    chosen.reserve(factors.size());
    expand(map, factors, 0, amplitude / weight, chosen, stats, poly);
  }

  State result(stats);
  for (const auto& [factors, coefficient] : poly) {
    result += monomial_to_state(Monomial{coefficient, factors}, stats);
  }
  result.prune();
  return result;
}

}  // namespace fbsim
