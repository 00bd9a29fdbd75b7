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

#include <compare>
#include <complex>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fbsim/errors.hpp"
#include "fbsim/tolerances.hpp"

namespace fbsim {

using Complex = std::complex<double>;

/// Exchange statistics of the particles a state or circuit carries.
/// Bosonic creation operators commute; fermionic ones anticommute.
enum class Statistics { Boson, Fermion };

std::string to_string(Statistics stats);

/// One composite mode: a network path together with an internal label.
/// The label axis carries any degree of freedom (polarisation, arrival
/// time, ...) that makes otherwise identical particles distinguishable.
///
/// The canonical mode order is lexicographic on (path, label); it fixes the
/// fermionic sign convention everywhere in the library.
struct Mode {
  int path = 0;
  int label = 0;

  friend auto operator<=>(const Mode&, const Mode&) = default;
};

std::string to_string(const Mode& mode);

/// Occupation-number basis ket over composite modes. Zero counts are never
/// stored; entries are kept in canonical mode order.
class Occupation {
 public:
  using Counts = std::vector<std::pair<Mode, int>>;

  /// The vacuum.
  Occupation() = default;

  /// Normalizes the given counts: sorts, merges duplicates, drops zeros.
  /// Negative counts are rejected.
  explicit Occupation(Counts counts);

  /// Occupation with one particle per entry of `factors` (repeats add up).
  static Occupation from_factors(const std::vector<Mode>& factors);

  const Counts& counts() const { return counts_; }
  int count(const Mode& mode) const;
  int total() const;
  bool empty() const { return counts_.empty(); }

  /// Expands back into one creation operator per particle, canonical order.
  std::vector<Mode> factors() const;

  /// Particle count per path, labels summed over. `n_paths` fixes the
  /// pattern length; every occupied path must be < n_paths.
  std::vector<int> path_pattern(int n_paths) const;

  int max_path() const;   // -1 for the vacuum
  int max_label() const;  // -1 for the vacuum

  friend auto operator<=>(const Occupation&, const Occupation&) = default;

 private:
  Counts counts_;
};

std::string to_string(const Occupation& occupation);
std::ostream& operator<<(std::ostream& os, const Occupation& occupation);

/// A scalar multiple of a product of creation operators. The factor
/// sequence is written left to right, so factors.back() acts on the vacuum
/// first; the order is significant until the monomial is normal-ordered.
struct Monomial {
  Complex coefficient{1.0, 0.0};
  std::vector<Mode> factors;

  bool is_zero() const { return coefficient == Complex{0.0, 0.0}; }
};

/// Rewrites a creation-operator product into canonical mode order.
///
/// Bosonic factors commute, so the coefficient is unchanged. Fermionic
/// factors anticommute: the coefficient picks up (-1)^inversions, where
/// inversions counts the transpositions of a stable sort, and any repeated
/// mode collapses the whole monomial to zero (Pauli exclusion). The zero
/// monomial is a valid result, not an error.
Monomial normal_order(const Monomial& monomial, Statistics stats);

/// Normalized complex-amplitude superposition of occupation kets. The empty
/// term map is the zero (annihilated) state and is a legal value. Fermionic
/// states never hold a count above one per composite mode.
class State {
 public:
  using Terms = std::map<Occupation, Complex>;

  explicit State(Statistics stats) : stats_(stats) {}

  static State vacuum(Statistics stats);

  Statistics statistics() const { return stats_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Accumulates `amplitude` onto the given ket. Throws PauliExclusionError
  /// if a fermionic ket holds a doubly occupied mode.
  void add_term(const Occupation& ket, Complex amplitude);

  Complex amplitude(const Occupation& ket) const;

  State& operator*=(Complex scale);
  State& operator+=(const State& other);

  /// Drops terms with amplitude modulus below the threshold.
  void prune(double threshold = kDropThreshold);

  double norm() const;
  State normalized() const;  // the zero state stays zero

  /// Largest particle count across terms (0 for the zero state).
  int max_total_occupation() const;
  int max_path() const;
  int max_label() const;

 private:
  Statistics stats_;
  Terms terms_;
};

std::string to_string(const State& state);
std::ostream& operator<<(std::ostream& os, const State& state);

/// Applies a normal-ordered monomial to the vacuum: the resulting ket has
/// the factor multiplicities as occupations and amplitude
/// coefficient * prod_m sqrt(n_m!). Normalization of a larger superposition
/// is the caller's concern. Fermionic multiplicity >= 2 is an error here
/// (normal_order would have returned the zero monomial first).
State monomial_to_state(const Monomial& monomial, Statistics stats);

/// sqrt(sum |amplitude|^2); 0 for the zero state.
double state_norm(const State& state);

/// Single ket with `counts[p]` particles on path p, all labels 0.
State fock_state(const std::vector<int>& counts, Statistics stats);

}  // namespace fbsim
