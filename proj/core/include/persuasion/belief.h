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

#ifndef PERSUASION_BELIEF_H_
#define PERSUASION_BELIEF_H_

#include <ostream>
#include <string>
#include <vector>

#include "persuasion/rational.h"

namespace persuasion {

// States are indexed 0..N-1 in the library. Files and the command line use
// 1-based labels; the conversion happens at the I/O boundary only.

// Sorted, duplicate-free, non-empty set of state indices.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::vector<int> members);
  static StateSet All(int num_states);
  static StateSet Pair(int l, int k);

  int size() const { return static_cast<int>(members_.size()); }
  const std::vector<int>& members() const { return members_; }
  int operator[](int i) const { return members_[i]; }
  bool Contains(int state) const;
  bool IsSubsetOf(const StateSet& other) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  // 1-based rendering, e.g. "{2,3}".
  std::string ToString() const;

  friend bool operator==(const StateSet& a, const StateSet& b) {
    return a.members_ == b.members_;
  }
  friend bool operator<(const StateSet& a, const StateSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members_ < b.members_;
  }

 private:
  std::vector<int> members_;
};

// A point of the probability simplex.
class Belief {
 public:
  Belief() = default;
  // Validates nonnegativity and unit sum; throws kMalformedInput.
  explicit Belief(std::vector<Rational> probs);
  // Skips validation. For internal use on values that are normalized by
  // construction.
  static Belief Unchecked(std::vector<Rational> probs);
  // Rescales a nonnegative vector with positive sum.
  static Belief Normalized(std::vector<Rational> weights);
  static Belief Vertex(int num_states, int state);
  static Belief Uniform(int num_states);

  int num_states() const { return static_cast<int>(probs_.size()); }
  const Rational& operator[](int l) const { return probs_[l]; }
  const std::vector<Rational>& probs() const { return probs_; }

  StateSet Support() const;
  bool HasFullSupport() const;
  bool IsDegenerate() const;
  bool LiesOn(const StateSet& omega) const;

  std::string ToString() const;

  friend bool operator==(const Belief& a, const Belief& b) {
    return a.probs_ == b.probs_;
  }
  friend bool operator!=(const Belief& a, const Belief& b) {
    return !(a == b);
  }
  friend bool operator<(const Belief& a, const Belief& b) {
    return a.probs_ < b.probs_;
  }

 private:
  std::vector<Rational> probs_;
};

std::ostream& operator<<(std::ostream& os, const Belief& b);

// Convex combination (1 - t) * a + t * b.
Belief Mix(const Belief& a, const Belief& b, const Rational& t);

// Belief on the edge between two vertices: (1 - t) delta_l + t delta_k.
Belief EdgePoint(int num_states, int l, int k, const Rational& t);

// Every belief whose coordinates are multiples of 1 / resolution, in
// lexicographic order of the coordinate vectors.
std::vector<Belief> SimplexGrid(int num_states, int resolution);

// Posterior after observing several conditionally independent interim
// beliefs: proportional to the product of the interim beliefs divided by the
// prior raised to (count - 1). Throws kUndefinedPosterior when the interim
// supports have empty intersection and kPreconditionFailed when the prior
// lacks full support.
Belief Combine(const Belief& prior, const std::vector<Belief>& interim);
Belief Combine(const Belief& prior, const Belief& x, const Belief& y);

// Successive mass ratios r_k = b_k / (1 - sum_{j<=k} b_j) over an ordered
// state set of size K. Holds K - 1 entries.
struct RatioRep {
  StateSet omega;
  std::vector<ExtendedRational> ratios;

  friend bool operator==(const RatioRep& a, const RatioRep& b) {
    return a.omega == b.omega && a.ratios == b.ratios;
  }
};

// Throws kNotOnSubsimplex if the support of b leaves omega.
RatioRep RatioRepOf(const Belief& b, const StateSet& omega);

// Inverse of RatioRepOf by back substitution.
Belief BeliefFromRatioRep(const RatioRep& r, int num_states);

}  // namespace persuasion

#endif  // PERSUASION_BELIEF_H_
