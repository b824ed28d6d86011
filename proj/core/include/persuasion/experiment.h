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

#ifndef PERSUASION_EXPERIMENT_H_
#define PERSUASION_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "persuasion/belief.h"
#include "persuasion/rational.h"

namespace persuasion {

struct Atom {
  Belief belief;
  Rational mass;

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.belief == b.belief && a.mass == b.mass;
  }
};

// Finite distribution over interim beliefs. Atoms are kept sorted by belief
// so that equality of experiments is plain vector equality.
class Experiment {
 public:
  Experiment() = default;
  // Validates positive masses summing to one, matching dimensions and
  // distinct beliefs. Bayes plausibility is checked separately.
  Experiment(Belief prior, std::vector<Atom> atoms);

  static Experiment FullyRevealing(const Belief& prior);
  static Experiment Uninformative(const Belief& prior);

  const Belief& prior() const { return prior_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  int size() const { return static_cast<int>(atoms_.size()); }
  int num_states() const { return prior_.num_states(); }

  Belief Mean() const;
  // True when every atom is a vertex of the simplex.
  bool IsFullyRevealing() const;
  // Mass of the atom at b, or zero.
  Rational MassOf(const Belief& b) const;

  friend bool operator==(const Experiment& a, const Experiment& b) {
    return a.prior_ == b.prior_ && a.atoms_ == b.atoms_;
  }
  friend bool operator!=(const Experiment& a, const Experiment& b) {
    return !(a == b);
  }

 private:
  Belief prior_;
  std::vector<Atom> atoms_;
};

enum class CanonicalKind { kFullyRevealing, kUninformative };
Experiment CanonicalExperiment(const Belief& prior, CanonicalKind kind);

struct PlausibilityViolation {
  Belief expected;
  Belief got;
};
// Empty optional means the mean equals the prior exactly.
std::optional<PlausibilityViolation> CheckBayesPlausible(const Experiment& e);

// Per-state signal likelihoods: likelihood[state][signal].
struct SignalStructure {
  std::vector<std::vector<Rational>> likelihood;

  int num_states() const { return static_cast<int>(likelihood.size()); }
  int num_signals() const {
    return likelihood.empty() ? 0 : static_cast<int>(likelihood[0].size());
  }
  // Throws kMalformedInput unless every row is a distribution.
  void Validate() const;
};

// Signal j corresponds to atom j: Pr(s_j | state l) = mass_j * x_l / prior_l.
SignalStructure ToSignalStructure(const Experiment& e);

class StrategyProfile {
 public:
  StrategyProfile() = default;
  // Throws kPriorMismatch when priors differ and kInvariantViolation when an
  // experiment is not Bayes plausible.
  explicit StrategyProfile(std::vector<Experiment> experiments);

  const Belief& prior() const { return experiments_.front().prior(); }
  const std::vector<Experiment>& experiments() const { return experiments_; }
  const Experiment& operator[](int i) const { return experiments_[i]; }
  int num_senders() const { return static_cast<int>(experiments_.size()); }

  // Copy with sender i's experiment replaced.
  StrategyProfile With(int i, Experiment e) const;
  // Every experiment except sender i's.
  std::vector<Experiment> Others(int i) const;

  friend bool operator==(const StrategyProfile& a, const StrategyProfile& b) {
    return a.experiments_ == b.experiments_;
  }

 private:
  std::vector<Experiment> experiments_;
};

inline constexpr std::uint64_t kDefaultProductCap = 1000000;

// Experiment induced by observing all experiments at once. Throws
// kProductTooLarge when the number of support tuples exceeds the cap and
// kPriorMismatch on differing priors. The empty list yields the
// uninformative experiment.
Experiment Product(const Belief& prior, const std::vector<Experiment>& list,
                   std::uint64_t cap = kDefaultProductCap);
Experiment Product(const StrategyProfile& profile,
                   std::uint64_t cap = kDefaultProductCap);

struct ConditionalAtom {
  Belief belief;
  Rational probability;
};
// Distribution of the other experiment's realization given interim belief x.
// Atoms with zero conditional probability are dropped.
std::vector<ConditionalAtom> ConditionalDist(const Experiment& other,
                                             const Belief& x);

}  // namespace persuasion

#endif  // PERSUASION_EXPERIMENT_H_
