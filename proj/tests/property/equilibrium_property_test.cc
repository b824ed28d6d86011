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


// Randomized checks of exploit certificates, profile verification and the
// finite-action receiver.

#include <gtest/gtest.h>

#include <random>

#include "persuasion/analysis.h"
#include "persuasion/equilibrium.h"
#include "persuasion/oracle.h"
#include "persuasion/receiver.h"
#include "support/games.h"
#include "support/helpers.h"

namespace persuasion {
namespace {

using testing::RandInt;
using testing::RandomExperiment;
using testing::RandomPrior;

GamePayoffs RandomSmallGame(int n, std::mt19937_64& rng) {
  if (n == 2) return testing::BinaryGridGame(testing::RandomBinaryKnots(4, rng));
  return testing::TernaryGridGame(3, testing::RandomTernaryValues(3, rng));
}

// For every maximal pooled set of a random profile: a certificate is found
// exactly when the classifier says the set is never pooled, and every
// certificate is legal and pays exactly epsilon times W.
TEST(ExploitProperty, CertificatesAreSoundOnRandomProfiles) {
  std::mt19937_64 rng(31);
  int certificates = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = RandInt(rng, 2, 3);
    GamePayoffs g = RandomSmallGame(n, rng);
    Belief prior = RandomPrior(n, rng);
    StrategyProfile p({RandomExperiment(prior, 3, rng), RandomExperiment(prior, 3, rng)});
    for (const StateSet& omega : DetectPooledSets(p).maximal) {
      PoolingVerdict v = ClassifyPooling(g, omega);
      std::optional<ExploitCertificate> c;
      try {
        c = SynthesizeExploit(g, p, omega);
      } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::kPreconditionFailed);
      }
      EXPECT_EQ(c.has_value(), v.never_pooled) << omega.ToString();
      if (!c) continue;
      ++certificates;
      EXPECT_FALSE(CheckBayesPlausible(c->deviation.experiment));
      EXPECT_GT(c->payoff, 0);
      EXPECT_EQ(c->payoff, c->deviation.epsilon * c->conditional_value);
      StrategyProfile after = ApplyCertificate(p, *c);
      EXPECT_EQ(ExpectedUtility(g, after, c->sender), c->payoff);
    }
  }
  EXPECT_GT(certificates, 10);
}

// Any profile that the exhaustive grid scan rejects is rejected by the
// verifier at the same resolution.
TEST(VerifyProperty, RejectsEverythingTheScanRejects) {
  std::mt19937_64 rng(32);
  const GridSpec grid{4, 3, 3};
  int rejected = 0;
  for (int trial = 0; trial < 8; ++trial) {
    GamePayoffs g = testing::BinaryGridGame(testing::RandomBinaryKnots(4, rng));
    const char* grid_priors[] = {"1/2", "1/4", "3/4"};
    Rational t = ParseRational(grid_priors[RandInt(rng, 0, 2)]);
    Belief prior({1 - t, t});
    auto strategies = EnumerateGridStrategies(prior, grid);
    for (int s = 0; s < 6; ++s) {
      StrategyProfile p({strategies[RandInt(rng, 0, strategies.size() - 1)],
                         strategies[RandInt(rng, 0, strategies.size() - 1)]});
      bool scan_rejects = BestResponseScan(g, p, 0, strategies).improved ||
                          BestResponseScan(g, p, 1, strategies).improved;
      if (!scan_rejects) continue;
      ++rejected;
      EXPECT_FALSE(VerifyProfile(g, p, grid.belief_resolution).looks_equilibrium);
    }
  }
  EXPECT_GT(rejected, 5);
}

TEST(ReceiverProperty, InducedZeroSumAndConvexRegions) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = RandInt(rng, 2, 4);
    ActionGame ag = testing::RandomActionGame(n, RandInt(rng, 2, 4), rng);
    for (int s = 0; s < 10; ++s) {
      Belief b = RandomPrior(n, rng);
      Belief c = RandomPrior(n, rng);
      EXPECT_EQ(InducedPayoff(ag, 0, b) + InducedPayoff(ag, 1, b), 0);
      if (BestAction(ag, b) != BestAction(ag, c)) continue;
      Rational lambda = Frac(RandInt(rng, 0, 12), 12);
      EXPECT_EQ(BestAction(ag, Mix(b, c, lambda)), BestAction(ag, b));
    }
  }
}

// An edge is pooled in every induced game exactly when both vertices share
// the receiver's best action, and the action-level classifier agrees with
// the payoff-level one.
TEST(ReceiverProperty, EdgeVerdictsFollowVertexActions) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = RandInt(rng, 2, 4);
    ActionGame ag = testing::RandomActionGame(n, RandInt(rng, 2, 4), rng);
    GamePayoffs g = NormalizePayoffs(InducedPayoffs(ag));
    for (int l = 0; l < n; ++l) {
      for (int k = l + 1; k < n; ++k) {
        bool zero = IsZeroOnSubsimplex(g.utilities[0], StateSet::Pair(l, k)).zero;
        bool same = BestAction(ag, Belief::Vertex(n, l)) == BestAction(ag, Belief::Vertex(n, k));
        EXPECT_EQ(zero, same);
      }
    }
    EXPECT_EQ(ClassifyActionGame(ag).full_revelation,
              ClassifyFullRevelation(g).full_revelation);
  }
}

}  // namespace
}  // namespace persuasion
