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

#include "fbsim/fock.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fbsim {

std::string to_string(Statistics stats) {
  return stats == Statistics::Boson ? "boson" : "fermion";
}

std::string to_string(const Mode& mode) {
  return "(" + std::to_string(mode.path) + "," + std::to_string(mode.label) +
         ")";
}

Occupation::Occupation(Counts counts) {
  for (const auto& [mode, n] : counts) {
    if (n < 0) {
      throw Error("occupation count must be non-negative for mode " +
                  to_string(mode));
    }
  }
  std::sort(counts.begin(), counts.end());
  for (const auto& [mode, n] : counts) {
    if (n == 0) continue;
    if (!counts_.empty() && counts_.back().first == mode) {
      counts_.back().second += n;
    } else {
      counts_.emplace_back(mode, n);
    }
  }
}

Occupation Occupation::from_factors(const std::vector<Mode>& factors) {
  Counts counts;
  counts.reserve(factors.size());
  for (const Mode& mode : factors) counts.emplace_back(mode, 1);
  return Occupation(std::move(counts));
}

int Occupation::count(const Mode& mode) const {
  for (const auto& [m, n] : counts_) {
    if (m == mode) return n;
  }
  return 0;
}

int Occupation::total() const {
  int total = 0;
  for (const auto& [m, n] : counts_) total += n;
  return total;
}

std::vector<Mode> Occupation::factors() const {
  std::vector<Mode> factors;
  factors.reserve(static_cast<size_t>(total()));
  for (const auto& [mode, n] : counts_) {
    for (int i = 0; i < n; ++i) factors.push_back(mode);
  }
  return factors;
}

std::vector<int> Occupation::path_pattern(int n_paths) const {
  std::vector<int> pattern(static_cast<size_t>(n_paths), 0);
  for (const auto& [mode, n] : counts_) {
    if (mode.path < 0 || mode.path >= n_paths) {
      throw Error("occupied path " + std::to_string(mode.path) +
                  " is outside the " + std::to_string(n_paths) +
                  "-path network");
    }
    pattern[static_cast<size_t>(mode.path)] += n;
  }
  return pattern;
}

int Occupation::max_path() const {
  int max = -1;
  for (const auto& [mode, n] : counts_) max = std::max(max, mode.path);
  return max;
}

int Occupation::max_label() const {
  int max = -1;
  for (const auto& [mode, n] : counts_) max = std::max(max, mode.label);
  return max;
}

std::string to_string(const Occupation& occupation) {
  std::string out = "|";
  bool first = true;
  for (const auto& [mode, n] : occupation.counts()) {
    if (!first) out += " ";
    out += std::to_string(n) + "_" + to_string(mode);
    first = false;
  }
  return out + ">";
}

std::ostream& operator<<(std::ostream& os, const Occupation& occupation) {
  return os << to_string(occupation);
}

namespace {

// Merge-sort that also counts inversions: the parity of the inversion count
// is the sign of the permutation a stable sort applies.
long long sort_counting_inversions(std::vector<Mode>& modes) {
  const size_t n = modes.size();
  if (n < 2) return 0;
  std::vector<Mode> buffer(n);
  long long inversions = 0;
  for (size_t width = 1; width < n; width *= 2) {
    for (size_t lo = 0; lo + width < n; lo += 2 * width) {
      const size_t mid = lo + width;
      const size_t hi = std::min(lo + 2 * width, n);
      size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (modes[j] < modes[i]) {
          inversions += static_cast<long long>(mid - i);
          buffer[k++] = modes[j++];
        } else {
          buffer[k++] = modes[i++];
        }
      }
      while (i < mid) buffer[k++] = modes[i++];
      while (j < hi) buffer[k++] = modes[j++];
      std::copy(buffer.begin() + static_cast<long>(lo),
                buffer.begin() + static_cast<long>(hi),
                modes.begin() + static_cast<long>(lo));
    }
  }
  return inversions;
}

bool has_adjacent_duplicate(const std::vector<Mode>& sorted) {
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

double sqrt_factorial(int n) {
  double product = 1.0;
  for (int k = 2; k <= n; ++k) product *= static_cast<double>(k);
  return std::sqrt(product);
}

}  // namespace

Monomial normal_order(const Monomial& monomial, Statistics stats) {
  Monomial result = monomial;
  if (stats == Statistics::Boson) {
    std::stable_sort(result.factors.begin(), result.factors.end());
    return result;
  }
  const long long inversions = sort_counting_inversions(result.factors);
  if (has_adjacent_duplicate(result.factors)) {
    return Monomial{Complex{0.0, 0.0}, {}};
  }
  if (inversions % 2 != 0) result.coefficient = -result.coefficient;
  return result;
}

State State::vacuum(Statistics stats) {
  State state(stats);
  state.add_term(Occupation{}, Complex{1.0, 0.0});
  return state;
}

void State::add_term(const Occupation& ket, Complex amplitude) {
  if (stats_ == Statistics::Fermion) {
    for (const auto& [mode, n] : ket.counts()) {
      if (n > 1) {
        throw PauliExclusionError(
            "fermionic mode " + to_string(mode) + " occupied " +
            std::to_string(n) + " times; (a^dag)^2 = 0");
      }
    }
  }
  terms_[ket] += amplitude;
}

Complex State::amplitude(const Occupation& ket) const {
  auto it = terms_.find(ket);
  return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

State& State::operator*=(Complex scale) {
  for (auto& [ket, amp] : terms_) amp *= scale;
  return *this;
}

State& State::operator+=(const State& other) {
  if (other.stats_ != stats_) {
    throw Error("cannot add states with different statistics");
  }
  for (const auto& [ket, amp] : other.terms_) add_term(ket, amp);
  return *this;
}

void State::prune(double threshold) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (std::abs(it->second) < threshold) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

double State::norm() const {
  double sum = 0.0;
  for (const auto& [ket, amp] : terms_) sum += std::norm(amp);
  return std::sqrt(sum);
}

State State::normalized() const {
  State result = *this;
  const double n = norm();
  if (n > 0.0) result *= Complex{1.0 / n, 0.0};
  return result;
}

int State::max_total_occupation() const {
  int max = 0;
  for (const auto& [ket, amp] : terms_) max = std::max(max, ket.total());
  return max;
}

int State::max_path() const {
  int max = -1;
  for (const auto& [ket, amp] : terms_) max = std::max(max, ket.max_path());
  return max;
}

int State::max_label() const {
  int max = -1;
  for (const auto& [ket, amp] : terms_) max = std::max(max, ket.max_label());
  return max;
}

std::string to_string(const State& state) {
  if (state.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [ket, amp] : state.terms()) {
    if (!first) os << " + ";
    os << "(" << amp.real() << (amp.imag() < 0 ? "" : "+") << amp.imag()
       << "i)" << to_string(ket);
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const State& state) {
  return os << to_string(state);
}

State monomial_to_state(const Monomial& monomial, Statistics stats) {
  const Occupation ket = Occupation::from_factors(monomial.factors);
  if (stats == Statistics::Fermion) {
    for (const auto& [mode, n] : ket.counts()) {
      if (n > 1) {
        throw PauliExclusionError("fermionic monomial repeats mode " +
                                  to_string(mode) + "; (a^dag)^2 = 0");
      }
    }
  }
  State state(stats);
  if (monomial.is_zero()) return state;
  double weight = 1.0;
  for (const auto& [mode, n] : ket.counts()) weight *= sqrt_factorial(n);
  state.add_term(ket, monomial.coefficient * weight);
  return state;
}

double state_norm(const State& state) { return state.norm(); }

State fock_state(const std::vector<int>& counts, Statistics stats) {
  Occupation::Counts occupation;
  for (size_t path = 0; path < counts.size(); ++path) {
    if (counts[path] < 0) {
      throw Error("negative particle count on path " + std::to_string(path));
    }
    if (counts[path] > 0) {
      occupation.emplace_back(Mode{static_cast<int>(path), 0}, counts[path]);
    }
  }
  State state(stats);
  state.add_term(Occupation(std::move(occupation)), Complex{1.0, 0.0});
  return state;
}

}  // namespace fbsim
