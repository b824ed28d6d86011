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

#ifndef PERSUASION_EQUILIBRIUM_H_
#define PERSUASION_EQUILIBRIUM_H_

#include <optional>
#include <string>
#include <vector>

#include "persuasion/belief.h"
#include "persuasion/experiment.h"
#include "persuasion/utility.h"

namespace persuasion {

StrategyProfile ConstructFullyRevealing(const Belief& prior, int num_senders);

// Every sender reveals the states outside omega and pools omega into the
// prior conditioned on omega. Throws kNotPoolable when some sender is
// nonzero on Delta(omega).
StrategyProfile ConstructPoolingEquilibrium(const GamePayoffs& g,
                                            const Belief& prior,
                                            const StateSet& omega);

// The single-atom deviation used throughout: the vertices plus the
// exploited belief x with mass epsilon = min_l prior_l / (2 x_l).
struct Deviation {
  Experiment experiment;
  Belief exploited;
  Rational epsilon;
};
Deviation DeviationToward(const Belief& prior, const Belief& x);

struct ExploitCertificate {
  int sender = -1;
  Deviation deviation;
  // Conditional payoff at the exploited belief against the product of the
  // whole profile, so the deviation is played on top of the sender's own
  // experiment.
  Rational conditional_value;
  Rational payoff;  // epsilon * conditional_value, strictly positive
  StateSet omega;   // the minimal set that was attacked
  std::string method;
};

struct ExploitOptions {
  int shrink_steps = 64;
};

// Throws kPreconditionFailed when the profile does not pool omega or every
// sender is zero on Delta(omega), kNotNormalized for raw payoffs and
// kSearchBudgetExceeded when no certificate verifies.
ExploitCertificate SynthesizeExploit(const GamePayoffs& g,
                                     const StrategyProfile& profile,
                                     const StateSet& omega,
                                     const ExploitOptions& options = {});

// The profile after the certificate's sender runs the deviation on top of
// its current experiment.
StrategyProfile ApplyCertificate(const StrategyProfile& profile,
                                 const ExploitCertificate& cert);

struct VerifyReport {
  bool looks_equilibrium = true;
  int sender = -1;
  std::optional<Experiment> deviation;
  Rational gain;
  // "exploit", "grid", "grid_in_addition" or "payoff".
  std::string reason;
  std::optional<Belief> exploited;
  std::vector<Rational> payoffs;  // expected utility of each sender
};

// Checks, in order: exploit certificates for every maximal pooled set,
// nonpositive conditional payoffs at every grid belief (against the other
// senders and against the whole profile), and zero expected utilities.
// Gains of the first two checks are the deviator's payoff, which is the
// improvement over the equilibrium value zero.
VerifyReport VerifyProfile(const GamePayoffs& g,
                           const StrategyProfile& profile,
                           int grid_resolution);

}  // namespace persuasion

#endif  // PERSUASION_EQUILIBRIUM_H_
