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

#include "persuasion/geometry.h"
#include "persuasion/utility.h"
#include "support/games.h"
#include "support/helpers.h"

namespace persuasion {
namespace {

using testing::B;
using testing::CodeOf;
using testing::JumpGame;
using testing::Q;

AffineForm F(const char* constant, std::vector<const char*> coeffs) {
  AffineForm f;
  f.constant = Q(constant);
  for (const char* c : coeffs) f.coeffs.push_back(Q(c));
  return f;
}

Belief Binary(const char* t) {
  return EdgePoint(2, 0, 1, Q(t));
}

TEST(EvalTest, FirstMatchResolvesTheJump) {
  const PiecewiseAffineUtility u = JumpGame().utilities[0];
  EXPECT_EQ(u.Eval(Binary("3/10")), Q("3/10"));
  EXPECT_EQ(u.Eval(Binary("3/5")), Q("2/5"));
  EXPECT_EQ(u.Eval(Binary("59/100")), Q("59/100"));
  EXPECT_EQ(u.Eval(Binary("0")), 0);
  EXPECT_EQ(u.Eval(Binary("1")), 0);
}

TEST(EvalTest, UncoveredBeliefThrows) {
  PiecewiseAffineUtility u(
      2, {Piece{{Inequality{F("-1/2", {"0", "1"}), Relation::kLess}},
                F("0", {"0", "0"})}});
  EXPECT_EQ(CodeOf([&] { u.Eval(Binary("3/4")); }), ErrorCode::kNoPieceMatches);
  auto gap = FindCoverageGap(u, 10);
  ASSERT_TRUE(gap);
  EXPECT_EQ(CodeOf([&] { u.Eval(*gap); }), ErrorCode::kNoPieceMatches);
  EXPECT_FALSE(FindCoverageGap(JumpGame().utilities[0], 50));
}

TEST(EvalTest, DimensionMismatchIsMalformed) {
  EXPECT_EQ(CodeOf([] {
              PiecewiseAffineUtility(3, {Piece{{}, F("0", {"0", "1"})}});
            }),
            ErrorCode::kMalformedInput);
}

TEST(NormalizeTest, LinearUtilityBecomesZero) {
  GamePayoffs g;
  g.utilities = {PiecewiseAffineUtility::Affine(F("0", {"0", "1"}))};
  GamePayoffs n = NormalizePayoffs(g);
  EXPECT_TRUE(VanishesAtVertices(n));
  for (const char* t : {"0", "1/3", "1"}) {
    EXPECT_EQ(n.utilities[0].Eval(Binary(t)), 0);
  }
}

TEST(NormalizeTest, NormalizedGameIsUnchanged) {
  GamePayoffs g = JumpGame();
  GamePayoffs n = NormalizePayoffs(g);
  EXPECT_EQ(n.utilities, g.utilities);
  EXPECT_EQ(NormalizePayoffs(n), n);
}

TEST(ZeroSumTest, Verdicts) {
  GamePayoffs g = JumpGame();
  EXPECT_TRUE(CheckZeroSum(g, 100).ok());
  GamePayoffs same;
  same.utilities = {g.utilities[0], g.utilities[0]};
  ZeroSumReport r = CheckZeroSum(same, 100);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(same.utilities[0].Eval(*r.witness), 0);
}

TEST(PayoffTest, ExpectedAndConditional) {
  GamePayoffs g = JumpGame();
  Belief prior = B({"1/2", "1/2"});
  Experiment u = Experiment::Uninformative(prior);
  Experiment fr = Experiment::FullyRevealing(prior);
  StrategyProfile uu({u, u});
  EXPECT_EQ(ExpectedUtility(g, uu, 0), Q("1/2"));
  EXPECT_EQ(ExpectedUtility(g, uu, 1), Q("-1/2"));
  EXPECT_EQ(ExpectedUtility(g, StrategyProfile({fr, fr}), 0), 0);
  EXPECT_EQ(ConditionalPayoff(g, uu, 0, Binary("3/5")), Q("2/5"));
  for (const char* t : {"1/10", "3/5", "9/10"}) {
    EXPECT_EQ(ConditionalPayoff(g, StrategyProfile({u, fr}), 0, Binary(t)), 0);
    EXPECT_EQ(ConditionalPayoff(g, uu, 0, Binary(t)),
              g.utilities[0].Eval(Binary(t)));
  }
}

TEST(EdgeRestrictionTest, JumpExampleEdge) {
  EdgeFunction f = EdgeRestriction(JumpGame().utilities[0], 0, 1);
  EXPECT_EQ(f.breakpoints(), (std::vector<Rational>{0, Frac(3, 5), 1}));
  ASSERT_EQ(f.segments().size(), 2u);
  EXPECT_EQ(f.segments()[0].slope, 1);
  EXPECT_EQ(f.segments()[1].slope, -1);
  EXPECT_EQ(f.point_values()[1], Q("2/5"));
  EXPECT_EQ(*f.FirstNonzero(), Q("3/10"));
  EXPECT_EQ(EdgeDerivativeAtVertex(JumpGame().utilities[0], 0, 1, EdgeEnd::kAtL), 1);
  EXPECT_EQ(EdgeDerivativeAtVertex(JumpGame().utilities[0], 0, 1, EdgeEnd::kAtK), -1);
}

TEST(EdgeRestrictionTest, ZeroUtilityIsOneInterval) {
  EdgeFunction f = EdgeRestriction(PiecewiseAffineUtility::Zero(3), 1, 2);
  EXPECT_TRUE(f.IsZero());
  EXPECT_EQ(f.segments().size(), 1u);
  EXPECT_EQ(f, EdgeFunction::Zero());
  EXPECT_EQ(EdgeDerivativeAtVertex(PiecewiseAffineUtility::Zero(3), 1, 2, EdgeEnd::kAtL), 0);
}

TEST(EdgeRestrictionTest, IsolatedPointValues) {
  // Positive only at the edge midpoint.
  AffineForm diff = F("0", {"1", "-1"});
  PiecewiseAffineUtility u(
      2, {Piece{{Inequality{diff, Relation::kGreaterEqual},
                 Inequality{diff, Relation::kLessEqual}},
                F("1", {"0", "0"})},
          Piece{{}, F("0", {"0", "0"})}});
  EdgeFunction f = EdgeRestriction(u, 0, 1);
  EXPECT_EQ(f.Eval(Q("1/2")), 1);
  EXPECT_EQ(f.Eval(Q("1/3")), 0);
  EXPECT_EQ(*f.FirstNonzero(), Q("1/2"));
  EXPECT_FALSE(f.IsZero());
}

TEST(EdgeFunctionTest, SumRefinesBreakpoints) {
  EdgeFunction a = EdgeRestriction(JumpGame().utilities[0], 0, 1);
  EdgeFunction b = EdgeRestriction(JumpGame().utilities[1], 0, 1);
  EXPECT_TRUE((a + b).IsZero());
}

TEST(CellsTest, CellsReproduceFirstMatch) {
  const PiecewiseAffineUtility u = JumpGame().utilities[0];
  auto cells = FirstMatchCells(u);
  for (const char* t : {"0", "1/5", "3/5", "7/10", "1"}) {
    Belief b = Binary(t);
    int hits = 0;
    for (const Cell& c : cells) {
      bool in = true;
      for (const auto& q : c.constraints) in = in && q.Holds(b);
      if (in) {
        ++hits;
        EXPECT_EQ(c.form.Eval(b), u.Eval(b));
      }
    }
    EXPECT_EQ(hits, 1) << t;
  }
}

TEST(SurplusTest, WorkedValues) {
  GamePayoffs g = JumpGame();
  EXPECT_EQ(MaxTotalSurplus(g).value, 0);
  GamePayoffs one;
  one.utilities = {g.utilities[0], PiecewiseAffineUtility::Zero(2)};
  SurplusResult r = MaxTotalSurplus(one);
  // Supremum approached from below the jump, not attained.
  EXPECT_EQ(r.value, Q("3/5"));
  EXPECT_TRUE(r.exact);
  EXPECT_EQ(r.argmax, Binary("3/5"));
}

TEST(GeometryTest, TriangleCellVertices) {
  // b_1 >= 1/2 on the full simplex: vertices delta_1, (1/2,1/2,0), (1/2,0,1/2).
  Region r{StateSet::All(3), {ToHalfSpace({F("-1/2", {"1", "0", "0"}),
                                           Relation::kGreaterEqual})}};
  auto geo = AnalyzeRegion(3, r);
  ASSERT_TRUE(geo);
  EXPECT_TRUE(geo->nonempty);
  EXPECT_EQ(geo->closure_vertices.size(), 3u);
  EXPECT_TRUE(r.Contains(geo->interior));
}

TEST(GeometryTest, StrictEmptiness) {
  // b_1 > 1 is empty although its closure touches delta_1.
  Region r{StateSet::All(3), {PositiveConstraint(F("-1", {"1", "0", "0"}))}};
  auto geo = AnalyzeRegion(3, r);
  ASSERT_TRUE(geo);
  EXPECT_FALSE(geo->nonempty);
  EXPECT_EQ(geo->closure_vertices.size(), 1u);
}

TEST(GeometryTest, BudgetExhaustion) {
  Region r{StateSet::All(3), {}};
  EXPECT_FALSE(AnalyzeRegion(3, r, 0));
}

}  // namespace
}  // namespace persuasion
