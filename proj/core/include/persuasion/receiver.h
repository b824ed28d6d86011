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


// Finite-action receivers: the receiver picks the lowest-indexed maximizer
// of expected utility, and each sender's utility over beliefs is the payoff
// of that action.

#ifndef PERSUASION_RECEIVER_H_
#define PERSUASION_RECEIVER_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "persuasion/belief.h"
#include "persuasion/experiment.h"
#include "persuasion/utility.h"

namespace persuasion {

struct ActionGame {
  std::vector<std::string> actions;
  std::vector<std::vector<Rational>> receiver;  // [action][state]
  std::vector<std::vector<std::vector<Rational>>> senders;  // [sender][action][state]
  Belief prior;

  int num_actions() const { return static_cast<int>(actions.size()); }
  int num_states() const { return prior.num_states(); }
  int num_senders() const { return static_cast<int>(senders.size()); }
};

// Throws kMalformedInput on ragged tables and kInvariantViolation when the
// senders' payoffs do not sum to zero or some agent is indifferent between
// two actions at a state.
void ValidateActionGame(const ActionGame& ag);

Rational ReceiverValue(const ActionGame& ag, int action, const Belief& b);
// Lowest-indexed maximizer of the receiver's expected utility.
int BestAction(const ActionGame& ag, const Belief& b);
Rational InducedPayoff(const ActionGame& ag, int sender, const Belief& b);

// The induced utility as guarded pieces, one per action. The guard of action
// a beats every lower action strictly and every higher action weakly, which
// encodes the tie-breaking rule exactly.
PiecewiseAffineUtility InducedUtility(const ActionGame& ag, int sender);
// Raw induced payoffs for all senders; normalize before classifying.
GamePayoffs InducedPayoffs(const ActionGame& ag);

// Edge restriction computed directly from the receiver's upper envelope.
EdgeFunction InducedEdge(const ActionGame& ag, int sender, int l, int k);

struct ActionClassification {
  bool full_revelation = true;
  std::optional<std::pair<int, int>> pair;  // first pair sharing a best action
  std::vector<int> vertex_actions;          // best action at each vertex
};
ActionClassification ClassifyActionGame(const ActionGame& ag);

struct FirstBestReport {
  bool always = true;
  std::optional<Belief> posterior;
  int state = -1;
  int action = -1;      // best action at the posterior
  int first_best = -1;  // best action at the state's vertex
};
// Checks that every posterior of the profile's product leads to the first
// best action of every state in its support.
FirstBestReport FirstBestCheck(const ActionGame& ag,
                               const StrategyProfile& profile);

}  // namespace persuasion

#endif  // PERSUASION_RECEIVER_H_
