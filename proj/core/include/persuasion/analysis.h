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

// Classifiers over normalized games. A normalized utility vanishes at every
// vertex, so on a face it is affine exactly when it is identically zero;
// "nonlinear on a face" is therefore tested as "nonzero on the face".

#ifndef PERSUASION_ANALYSIS_H_
#define PERSUASION_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "persuasion/belief.h"
#include "persuasion/experiment.h"
#include "persuasion/utility.h"

namespace persuasion {

struct ZeroCheck {
  bool zero = true;
  std::optional<Belief> witness;  // a point of the face with nonzero value
  bool sampled = false;           // true when exact enumeration was skipped
};

struct ZeroCheckOptions {
  int samples = 10000;
  std::uint64_t seed = 1;
};

// Throws kNotNormalized unless u vanishes at every vertex.
ZeroCheck IsZeroOnSubsimplex(const PiecewiseAffineUtility& u,
                             const StateSet& omega,
                             const ZeroCheckOptions& options = {});

struct PoolingVerdict {
  StateSet omega;
  bool never_pooled = false;
  int witness_sender = -1;        // lowest sender positive at the witness
  std::optional<Belief> witness;  // point where some sender is nonzero
  bool sampled = false;
};
// Preconditions: normalized and zero-sum payoffs.
PoolingVerdict ClassifyPooling(const GamePayoffs& g, const StateSet& omega);

struct RevelationReport {
  std::vector<PoolingVerdict> edges;  // every pair l < k, in order
  bool full_revelation = true;
  std::optional<StateSet> pooled_pair;  // first edge nobody can break
};
RevelationReport ClassifyFullRevelation(const GamePayoffs& g);

// Subsets of size two or more, ordered by size then members, on which some
// sender is nonzero while every proper subset is zero for all senders.
std::vector<StateSet> MinimalSubsets(const GamePayoffs& g);

struct PooledSets {
  std::vector<StateSet> all;      // every pooled set of size >= 2
  std::vector<StateSet> maximal;  // the posterior supports that are maximal
};
PooledSets DetectPooledSets(const StrategyProfile& profile);

struct Condition1Edge {
  int l = 0;
  int k = 0;
  bool satisfied = false;
  int sender = -1;  // first sender with a nonzero end slope
  std::vector<Rational> slope_at_l;  // per sender
  std::vector<Rational> slope_at_k;  // per sender
};
struct Condition1Report {
  std::vector<Condition1Edge> edges;
  bool satisfied = true;
};
// Requires normalized payoffs. A negative verdict is inconclusive for
// infinite-signal strategies.
Condition1Report Condition1(const GamePayoffs& g);

struct SurplusSufficiency {
  bool holds = false;
  std::optional<Belief> witness;  // non-vertex belief with total >= 0
  bool exact = true;
};
// Tests whether the summed utilities are negative away from the vertices.
SurplusSufficiency StrictSurplusSufficiency(const GamePayoffs& g);

}  // namespace persuasion

#endif  // PERSUASION_ANALYSIS_H_
