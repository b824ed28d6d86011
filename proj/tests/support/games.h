// Copyright 2026 The Persuasion Authors. All rights reserved.
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


// Random game families shared by the property tests, the acceptance binary
// and the benchmarks. All generators are deterministic in their seed.

#ifndef PERSUASION_TESTS_SUPPORT_GAMES_H_
#define PERSUASION_TESTS_SUPPORT_GAMES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "persuasion/belief.h"
#include "persuasion/experiment.h"
#include "persuasion/receiver.h"
#include "persuasion/utility.h"

namespace persuasion::testing {

// The two-state game whose first sender earns b_2 below 3/5 and 1 - b_2 from
// 3/5 on; the second sender earns the negative.
GamePayoffs JumpGame();

// Two senders, u_2 = -u_1, with u_1 the continuous piecewise-linear
// interpolation of `knots` (one value per multiple of 1/D along the edge).
GamePayoffs BinaryGridGame(const std::vector<Rational>& knots);
// Knot values uniform in [-2, 2], zero at both ends.
std::vector<Rational> RandomBinaryKnots(int resolution, std::mt19937_64& rng);

// Three states, two senders, u_2 = -u_1, with u_1 linear on every triangle of
// the standard triangulation of the resolution-D grid. values[i][j] is the
// value at b = ((D - i - j), i, j) / D and must vanish at the vertices.
GamePayoffs TernaryGridGame(int resolution,
                            const std::vector<std::vector<Rational>>& values);
// Random node values; each edge is zeroed with probability 1/3.
std::vector<std::vector<Rational>> RandomTernaryValues(int resolution,
                                                       std::mt19937_64& rng);

// Normalized zero-sum game with M senders on N states built from random
// tent pieces; the last sender carries the negated sum of the others.
GamePayoffs RandomNormalizedGame(int num_states, int num_senders,
                                 std::mt19937_64& rng);

Belief RandomPrior(int num_states, std::mt19937_64& rng);
// A random Bayes-plausible experiment with at most `max_support` atoms.
Experiment RandomExperiment(const Belief& prior, int max_support,
                            std::mt19937_64& rng);

// Random generic zero-sum action game with two senders.
ActionGame RandomActionGame(int num_states, int num_actions,
                            std::mt19937_64& rng);

}  // namespace persuasion::testing

#endif  // PERSUASION_TESTS_SUPPORT_GAMES_H_
