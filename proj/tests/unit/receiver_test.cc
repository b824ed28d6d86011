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


#include <gtest/gtest.h>

#include "persuasion/analysis.h"
#include "persuasion/equilibrium.h"
#include "persuasion/receiver.h"
#include "support/helpers.h"

namespace persuasion {
namespace {

using testing::B;
using testing::CodeOf;
using testing::Q;

std::vector<Rational> Row(std::vector<int> v) {
  return std::vector<Rational>(v.begin(), v.end());
}

ActionGame MatchingGame() {
  ActionGame ag;
  ag.actions = {"a1", "a2"};
  ag.prior = B({"1/2", "1/2"});
  ag.receiver = {Row({1, 0}), Row({0, 1})};
  ag.senders = {{Row({1, -1}), Row({-1, 1})}, {Row({-1, 1}), Row({1, -1})}};
  return ag;
}

// Three states where the first two share the receiver's best action.
ActionGame SharedActionGame() {
  ActionGame ag;
  ag.actions = {"a1", "a2"};
  ag.prior = Belief::Uniform(3);
  ag.receiver = {Row({2, 2, 0}), Row({1, 1, 3})};
  ag.senders = {{Row({1, 2, 3}), Row({-1, -2, -3})},
                {Row({-1, -2, -3}), Row({1, 2, 3})}};
  return ag;
}

TEST(BestActionTest, LowestIndexBreaksTies) {
  ActionGame ag = MatchingGame();
  EXPECT_EQ(BestAction(ag, B({"1/2", "1/2"})), 0);
  EXPECT_EQ(BestAction(ag, B({"0", "1"})), 1);
  EXPECT_EQ(BestAction(ag, B({"2/5", "3/5"})), 1);
}

TEST(InducedPayoffTest, WorkedValues) {
  ActionGame ag = MatchingGame();
  EXPECT_EQ(InducedPayoff(ag, 0, B({"3/4", "1/4"})), Q("1/2"));
  EXPECT_EQ(InducedPayoff(ag, 0, B({"1/2", "1/2"})), 0);
  EXPECT_EQ(InducedPayoff(ag, 0, Belief::Vertex(2, 1)), 1);
}

TEST(InducedUtilityTest, GuardPiecesMatchDirectEvaluation) {
  ActionGame ag = SharedActionGame();
  for (int i = 0; i < 2; ++i) {
    PiecewiseAffineUtility u = InducedUtility(ag, i);
    for (const Belief& b : SimplexGrid(3, 6)) {
      EXPECT_EQ(u.Eval(b), InducedPayoff(ag, i, b)) << b;
    }
  }
}

TEST(InducedEdgeTest, EnvelopeMatchesGuardPieces) {
  ActionGame ag = SharedActionGame();
  for (int l = 0; l < 3; ++l) {
    for (int k = l + 1; k < 3; ++k) {
      EXPECT_EQ(InducedEdge(ag, 0, l, k),
                EdgeRestriction(InducedUtility(ag, 0), l, k));
    }
  }
  // Matching game: the receiver switches at t = 1/2 and keeps a1 there.
  EdgeFunction f = InducedEdge(MatchingGame(), 0, 0, 1);
  EXPECT_EQ(f.breakpoints(), (std::vector<Rational>{0, Frac(1, 2), 1}));
  EXPECT_EQ(f.Eval(Frac(1, 2)), 0);
}

TEST(ClassifyActionGameTest, Verdicts) {
  ActionClassification m = ClassifyActionGame(MatchingGame());
  EXPECT_TRUE(m.full_revelation);
  EXPECT_EQ(m.vertex_actions, (std::vector<int>{0, 1}));
  ActionClassification s = ClassifyActionGame(SharedActionGame());
  EXPECT_FALSE(s.full_revelation);
  EXPECT_EQ(*s.pair, std::make_pair(0, 1));
  RevelationReport r = ClassifyFullRevelation(NormalizePayoffs(InducedPayoffs(SharedActionGame())));
  EXPECT_FALSE(r.full_revelation);
  EXPECT_EQ(*r.pooled_pair, StateSet::Pair(0, 1));
}

TEST(ClassifyActionGameTest, DominantActionPoolsEverything) {
  ActionGame ag = MatchingGame();
  ag.receiver = {Row({2, 3}), Row({0, 1})};
  EXPECT_FALSE(ClassifyActionGame(ag).full_revelation);
}

TEST(ValidationTest, IndifferenceAndZeroSum) {
  ActionGame ag = MatchingGame();
  ag.receiver[1][0] = 1;
  EXPECT_EQ(CodeOf([&] { ValidateActionGame(ag); }), ErrorCode::kInvariantViolation);
  ag = MatchingGame();
  ag.senders[1][0][0] = 2;
  EXPECT_EQ(CodeOf([&] { ValidateActionGame(ag); }), ErrorCode::kInvariantViolation);
  ag = MatchingGame();
  ag.receiver.pop_back();
  EXPECT_EQ(CodeOf([&] { ValidateActionGame(ag); }), ErrorCode::kMalformedInput);
}

TEST(FirstBestTest, Verdicts) {
  ActionGame ag = SharedActionGame();
  GamePayoffs g = NormalizePayoffs(InducedPayoffs(ag));
  EXPECT_TRUE(FirstBestCheck(ag, ConstructFullyRevealing(ag.prior, 2)).always);
  StrategyProfile pool = ConstructPoolingEquilibrium(g, ag.prior, StateSet::Pair(0, 1));
  EXPECT_TRUE(VerifyProfile(g, pool, 4).looks_equilibrium);
  EXPECT_TRUE(FirstBestCheck(ag, pool).always);
  Experiment u = Experiment::Uninformative(ag.prior);
  FirstBestReport bad = FirstBestCheck(ag, StrategyProfile({u, u}));
  EXPECT_FALSE(bad.always);
  EXPECT_EQ(*bad.posterior, ag.prior);
  EXPECT_EQ(bad.state, 0);
  EXPECT_EQ(bad.action, 1);
}

}  // namespace
}  // namespace persuasion
