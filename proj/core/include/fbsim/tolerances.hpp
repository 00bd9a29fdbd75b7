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

namespace fbsim {

// Absolute tolerance for amplitude and probability comparisons. All
// amplitudes handled here are small algebraic numbers, exact to ~1e-15 in
// double precision.
inline constexpr double kAmplitudeTolerance = 1e-9;

// Amplitudes with modulus below this are dropped from superpositions.
inline constexpr double kDropThreshold = 1e-12;

// Operator-polynomial expansion is exponential in particle number; states
// with more particles than this are rejected.
inline constexpr int kMaxParticles = 8;

}  // namespace fbsim
