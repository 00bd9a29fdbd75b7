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

#include "fbsim/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace fbsim {

namespace {

constexpr double kPi = std::numbers::pi;

Circuit single_beamsplitter(Statistics stats) {
  Circuit circuit;
  circuit.n_paths = 2;
  circuit.statistics = stats;
  circuit.elements = {Beamsplitter{FIFTY_FIFTY, 0, 1}};
  return circuit;
}

Scenario prepared(std::string name, Circuit circuit, State input,
                  DetectionDistribution::Outcomes expected) {
  return Scenario{std::move(name),
                  Scenario::Prepared{std::move(circuit), std::move(input),
                                     DetectionDistribution(std::move(expected))}};
}

// One particle in each port of a single 50:50 beamsplitter, overlap r.
Scenario hom_partial(Statistics stats, double r) {
  const double coincidence =
      stats == Statistics::Boson ? (1.0 - r) / 2.0 : (1.0 + r) / 2.0;
  const double bunched = (1.0 - coincidence) / 2.0;
  std::ostringstream name;
  name << "HOM-partial-r-" << to_string(stats) << "(r=" << r << ")";
  return prepared(
      name.str(), single_beamsplitter(stats),
      inject_pair(0, 1, Distinguishability(r), stats, 2).state,
      {{{1, 1}, coincidence}, {{2, 0}, bunched}, {{0, 2}, bunched}});
}

// Opposite-port MZI input with overlap r; the distribution depends on phi
// and the statistics but not on r.
Scenario mzi_partial(Statistics stats, double r, double phi) {
  DetectionDistribution::Outcomes expected;
  if (stats == Statistics::Fermion) {
    expected = {{{1, 1}, 1.0}};
  } else {
    const double coincidence = std::cos(phi) * std::cos(phi);
    expected = {{{1, 1}, coincidence},
                {{2, 0}, (1.0 - coincidence) / 2.0},
                {{0, 2}, (1.0 - coincidence) / 2.0}};
  }
  std::ostringstream name;
  name << "MZI-partial-r-" << to_string(stats) << "(r=" << r
       << ",phi=" << phi << ")";
  return prepared(name.str(), mzi(phi, stats),
                  inject_pair(0, 1, Distinguishability(r), stats, 2).state,
                  std::move(expected));
}

Scenario mzi_same_port_boson(double phi, const std::string& phi_name) {
  const double s = std::sin(phi / 2.0);
  const double c = std::cos(phi / 2.0);
  const double sin_phi = std::sin(phi);
  return prepared("MZI-same-port-boson(phi=" + phi_name + ")",
                  mzi(phi, Statistics::Boson),
                  fock_state({2, 0}, Statistics::Boson),
                  {{{2, 0}, s * s * s * s},
                   {{1, 1}, sin_phi * sin_phi / 2.0},
                   {{0, 2}, c * c * c * c}});
}

}  // namespace

std::vector<Scenario> scenario_catalog() {
  std::vector<Scenario> catalog;

  catalog.push_back(prepared(
      "HOM-boson", single_beamsplitter(Statistics::Boson),
      fock_state({1, 1}, Statistics::Boson),
      {{{2, 0}, 0.5}, {{0, 2}, 0.5}, {{1, 1}, 0.0}}));

  catalog.push_back(prepared("HOM-fermion",
                             single_beamsplitter(Statistics::Fermion),
                             fock_state({1, 1}, Statistics::Fermion),
                             {{{1, 1}, 1.0}}));

  catalog.push_back(prepared(
      "same-port-boson", single_beamsplitter(Statistics::Boson),
      fock_state({2, 0}, Statistics::Boson),
      {{{2, 0}, 0.25}, {{1, 1}, 0.5}, {{0, 2}, 0.25}}));

  catalog.push_back(Scenario{
      "same-port-fermion-excluded", Scenario::MustExclude{[] {
        inject_pair(0, 0, Distinguishability(1.0), Statistics::Fermion, 2);
      }}});

  catalog.push_back(hom_partial(Statistics::Boson, 0.5));
  catalog.push_back(hom_partial(Statistics::Fermion, 0.5));

  catalog.push_back(prepared("MZI-balanced-boson", mzi(0.0, Statistics::Boson),
                             fock_state({1, 1}, Statistics::Boson),
                             {{{1, 1}, 1.0}}));
  catalog.push_back(prepared(
      "MZI-balanced-fermion", mzi(0.0, Statistics::Fermion),
      fock_state({1, 1}, Statistics::Fermion), {{{1, 1}, 1.0}}));

  // P(1,1) = cos^2(pi/3) = 1/4, the rest bunches.
  catalog.push_back(prepared(
      "MZI-phase-boson(phi=pi/3)", mzi(kPi / 3.0, Statistics::Boson),
      fock_state({1, 1}, Statistics::Boson),
      {{{1, 1}, 0.25}, {{2, 0}, 0.375}, {{0, 2}, 0.375}}));
  catalog.push_back(prepared(
      "MZI-phase-fermion(phi=pi/3)", mzi(kPi / 3.0, Statistics::Fermion),
      fock_state({1, 1}, Statistics::Fermion), {{{1, 1}, 1.0}}));

  catalog.push_back(mzi_partial(Statistics::Boson, 0.5, 0.0));
  catalog.push_back(mzi_partial(Statistics::Fermion, 0.5, 0.0));

  catalog.push_back(mzi_same_port_boson(0.0, "0"));
  catalog.push_back(mzi_same_port_boson(kPi / 2.0, "pi/2"));
  catalog.push_back(mzi_same_port_boson(kPi, "pi"));

  return catalog;
}

ScenarioResult run_scenario(const Scenario& scenario) {
  ScenarioResult result;
  result.name = scenario.name;
  if (const auto* prepared = std::get_if<Scenario::Prepared>(&scenario.body)) {
    try {
      const State output = evaluate(prepared->circuit, prepared->input);
      const DetectionDistribution actual =
          detect(output, prepared->circuit.n_paths);
      if (std::abs(actual.total() - 1.0) > kAmplitudeTolerance) {
        result.detail = "detection probabilities sum to " +
                        std::to_string(actual.total());
      } else if (!actual.approx_equal(prepared->expected)) {
        std::ostringstream os;
        os << "distribution mismatch:";
        for (const auto& [pattern, p] : actual.outcomes()) {
          os << " P(" << pattern_string(pattern) << ")=" << p;
        }
        result.detail = os.str();
      } else {
        result.passed = true;
      }
    } catch (const std::exception& e) {
      result.detail = std::string("evaluation failed: ") + e.what();
    }
    return result;
  }

  const auto& must_exclude = std::get<Scenario::MustExclude>(scenario.body);
  try {
    must_exclude.construct();
    result.detail = "construction succeeded but should be Pauli-excluded";
  } catch (const PauliExclusionError&) {
    result.passed = true;
  } catch (const std::exception& e) {
    result.detail = std::string("wrong error type: ") + e.what();
  }
  return result;
}

std::vector<ScenarioResult> run_all_scenarios() {
  std::vector<ScenarioResult> results;
  for (const Scenario& scenario : scenario_catalog()) {
    results.push_back(run_scenario(scenario));
  }
  return results;
}

}  // namespace fbsim
