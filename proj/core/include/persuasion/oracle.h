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


// Brute-force ground truth. Everything here works from per-state signal
// likelihoods and Bayes' rule directly; none of it goes through the
// closed-form posterior combination used by the rest of the library.

#ifndef PERSUASION_ORACLE_H_
#define PERSUASION_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "persuasion/belief.h"
#include "persuasion/experiment.h"
#include "persuasion/utility.h"

namespace persuasion {

struct GridSpec {
  int belief_resolution = 1;  // beliefs are multiples of 1/D
  int mass_resolution = 1;    // masses are multiples of 1/R
  int max_support = 1;
  // Throws kMalformedInput unless every field is at least 1.
  void Validate() const;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1000000;

// Pr(state | signals) proportional to prior_l * prod_i Pr(s_i | state l).
// Throws kZeroProbabilityEvent when every state has zero joint likelihood.
Belief RawPosterior(const std::vector<SignalStructure>& structures,
                    const std::vector<int>& realized, const Belief& prior);

// Distribution of the posterior when every structure is observed, merged
// over signal tuples that lead to the same belief.
Experiment RawPosteriorLaw(const Belief& prior,
                           const std::vector<SignalStructure>& structures);

// Candidate (support, masses) pairs examined before the plausibility filter.
std::uint64_t CountGridCandidates(int num_states, const GridSpec& grid);

// Visits every Bayes-plausible grid experiment: by support size, then support
// in grid order, then masses lexicographically. Throws kEnumerationTooLarge
// when the candidate count exceeds the cap.
void ForEachGridStrategy(const Belief& prior, const GridSpec& grid,
                         const std::function<void(const Experiment&)>& visit,
                         std::uint64_t cap = kDefaultEnumerationCap);
std::vector<Experiment> EnumerateGridStrategies(
    const Belief& prior, const GridSpec& grid,
    std::uint64_t cap = kDefaultEnumerationCap);

// Expected utility of u when all structures are observed.
Rational OracleExpectedUtility(const PiecewiseAffineUtility& u,
                               const Belief& prior,
                               const std::vector<SignalStructure>& structures);

struct ScanResult {
  bool improved = false;
  std::optional<Experiment> deviation;  // the deviator's resulting experiment
  Rational gain;
  bool in_addition = false;  // the grid strategy was run on top of the old one
  int strategy = -1;         // index into the candidate list
};

// Sender i tries every candidate, both in place of its experiment and on top
// of it, and reports the first strict improvement.
ScanResult BestResponseScan(const GamePayoffs& g, const StrategyProfile& profile,
                            int sender, const std::vector<Experiment>& candidates);
ScanResult BestResponseScan(const GamePayoffs& g, const StrategyProfile& profile,
                            int sender, const GridSpec& grid,
                            std::uint64_t cap = kDefaultEnumerationCap);

struct FullRevelationScanResult {
  bool only_fully_revealing = true;
  std::optional<StrategyProfile> profile;  // a non-revealing grid equilibrium
  std::uint64_t profiles_checked = 0;
  std::uint64_t strategies = 0;
};

// Scans all profiles of grid strategies for a grid equilibrium whose
// posteriors are not all degenerate. Throws kEnumerationTooLarge when the
// profile count exceeds the cap.
FullRevelationScanResult FullRevelationScan(
    const GamePayoffs& g, const Belief& prior, const GridSpec& grid,
    std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace persuasion

#endif  // PERSUASION_ORACLE_H_
