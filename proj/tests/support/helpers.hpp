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

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <vector>

#include "fbsim/circuit.hpp"
#include "fbsim/oracle.hpp"

namespace fbsim::test {

// Brute-force ladder oracle: applies the factors right to left to the
// vacuum, one operator at a time. Bosonic application multiplies by
// sqrt(n+1); fermionic application kills occupied modes and picks up the
// parity of the occupied modes that precede the new one. Independent of
// normal_order and monomial_to_state by construction.
inline State ladder_apply(const Monomial& monomial, Statistics stats) {
  std::map<Occupation, Complex> terms{{Occupation{}, monomial.coefficient}};
  for (auto it = monomial.factors.rbegin(); it != monomial.factors.rend();
       ++it) {
    const Mode mode = *it;
    std::map<Occupation, Complex> next;
    for (const auto& [occ, amp] : terms) {
      Occupation::Counts counts = occ.counts();
      counts.emplace_back(mode, 1);
      if (stats == Statistics::Boson) {
        const double n = static_cast<double>(occ.count(mode));
        next[Occupation(counts)] += amp * std::sqrt(n + 1.0);
      } else {
        if (occ.count(mode) > 0) continue;
        int preceding = 0;
        for (const auto& [m, n] : occ.counts()) {
          if (m < mode) preceding += n;
        }
        next[Occupation(counts)] += (preceding % 2 == 0) ? amp : -amp;
      }
    }
    terms = std::move(next);
  }
  State state(stats);
  for (const auto& [occ, amp] : terms) state.add_term(occ, amp);
  state.prune();
  return state;
}

inline bool states_match_up_to_phase(const State& a, const State& b,
                                     double tol = kAmplitudeTolerance) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const Occupation* anchor = nullptr;
  double best = 0.0;
  for (const auto& [ket, amp] : a.terms()) {
    if (std::abs(amp) > best) {
      best = std::abs(amp);
      anchor = &ket;
    }
  }
  const Complex reference = b.amplitude(*anchor);
  if (std::abs(reference) < tol) return false;
  const Complex phase = reference / a.amplitude(*anchor);
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  for (const auto& [ket, amp] : a.terms()) {
    if (std::abs(amp * phase - b.amplitude(ket)) > tol) return false;
  }
  for (const auto& [ket, amp] : b.terms()) {
    if (std::abs(a.amplitude(ket) * phase - amp) > tol) return false;
  }
  return true;
}

inline void enumerate_rec(const std::vector<Mode>& modes, size_t index,
                          int remaining, Statistics stats,
                          Occupation::Counts& current,
                          std::vector<Occupation>& out) {
  if (remaining == 0) {
    out.push_back(Occupation(current));
    return;
  }
  if (index == modes.size()) return;
  const int cap = stats == Statistics::Fermion ? 1 : remaining;
  for (int n = 0; n <= cap; ++n) {
    if (n > 0) current.emplace_back(modes[index], n);
    enumerate_rec(modes, index + 1, remaining - n, stats, current, out);
    if (n > 0) current.pop_back();
  }
}

// All occupation patterns of `particles` particles over the given modes.
inline std::vector<Occupation> enumerate_occupations(
    const std::vector<Mode>& modes, int particles, Statistics stats) {
  std::vector<Occupation> out;
  Occupation::Counts current;
  enumerate_rec(modes, 0, particles, stats, current, out);
  return out;
}

// Output state predicted by the permanent/determinant oracle for a state
// passing through a path map, labels as spectators.
inline State oracle_transition(const ModeMap& path_map, int n_labels,
                               const State& input) {
  const ModeMap composite = lift_over_labels(path_map, n_labels);
  std::vector<Mode> modes;
  for (int p = 0; p < path_map.dim(); ++p) {
    for (int l = 0; l < n_labels; ++l) modes.push_back(Mode{p, l});
  }
  State out(input.statistics());
  for (const auto& [in_ket, amp] : input.terms()) {
    for (const Occupation& out_ket :
         enumerate_occupations(modes, in_ket.total(), input.statistics())) {
      const Complex a = amplitude(
          TransitionQuery{composite, n_labels, in_ket, out_ket},
          input.statistics());
      out.add_term(out_ket, amp * a);
    }
  }
  out.prune();
  return out;
}

// Overall path map of a circuit, elements composed in evaluation order.
inline ModeMap circuit_map(const Circuit& circuit) {
  ModeMap map(circuit.n_paths);
  for (const Element& element : circuit.elements) {
    map = compose(element_map(element, circuit.n_paths), map);
  }
  return map;
}

inline double random_angle(std::mt19937& rng) {
  return std::uniform_real_distribution<double>(0.0,
                                                2.0 * std::numbers::pi)(rng);
}

// Random unitary built from beamsplitter and phase layers.
inline ModeMap random_unitary(std::mt19937& rng, int n_paths, int layers) {
  std::uniform_int_distribution<int> pick_path(0, n_paths - 1);
  ModeMap map(n_paths);
  for (int i = 0; i < layers; ++i) {
    map = compose(phase_shift(random_angle(rng), pick_path(rng), n_paths),
                  map);
    if (n_paths >= 2) {
      int a = pick_path(rng);
      int b = pick_path(rng);
      while (b == a) b = pick_path(rng);
      map = compose(beamsplitter(random_angle(rng), a, b, n_paths), map);
    }
  }
  return map;
}

inline Circuit random_circuit(std::mt19937& rng, int n_paths,
                              Statistics stats, int max_elements = 6) {
  std::uniform_int_distribution<int> pick_count(1, max_elements);
  std::uniform_int_distribution<int> pick_path(0, n_paths - 1);
  std::uniform_int_distribution<int> pick_kind(0, 1);
  Circuit circuit;
  circuit.n_paths = n_paths;
  circuit.statistics = stats;
  const int count = pick_count(rng);
  for (int i = 0; i < count; ++i) {
    if (n_paths >= 2 && pick_kind(rng) == 0) {
      int a = pick_path(rng);
      int b = pick_path(rng);
      while (b == a) b = pick_path(rng);
      circuit.elements.push_back(Beamsplitter{random_angle(rng), a, b});
    } else {
      circuit.elements.push_back(
          PhaseShift{random_angle(rng), pick_path(rng)});
    }
  }
  return circuit;
}

}  // namespace fbsim::test
