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


// Acceptance run: one PASS or FAIL line per criterion, nonzero exit status
// when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "persuasion/analysis.h"
#include "persuasion/belief.h"
#include "persuasion/equilibrium.h"
#include "persuasion/experiment.h"
#include "persuasion/oracle.h"
#include "persuasion/receiver.h"
#include "persuasion/utility.h"
#include "scenario.h"
#include "support/games.h"
#include "support/helpers.h"

namespace persuasion {
namespace {

using testing::RandInt;

// Collects failures of one criterion; the first few are printed.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_ < 5) notes_ << "    " << what << "\n";
    ++failures_;
  }
  int failures() const { return failures_; }
  std::string notes() const { return notes_.str(); }

 private:
  int failures_ = 0;
  std::ostringstream notes_;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fixture(const std::string& name) {
  return std::string(PERSUASION_FIXTURE_DIR) + "/" + name + ".json";
}

// Posterior engine: closed-form combination against raw signal posteriors.
void PosteriorEngine(Check& c, std::string& summary) {
  auto start = Clock::now();
  std::mt19937_64 rng(101);
  int instances = 0;
  while (instances < 1000) {
    const int n = RandInt(rng, 2, 4);
    const int m = RandInt(rng, 1, 3);
    Belief prior = testing::RandomPrior(n, rng);
    std::vector<Experiment> list;
    std::vector<SignalStructure> structures;
    for (int i = 0; i < m; ++i) {
      list.push_back(testing::RandomExperiment(prior, 5, rng));
      structures.push_back(ToSignalStructure(list.back()));
    }
    // Draw one atom per sender; skip contradictory tuples.
    std::vector<int> realized;
    std::vector<Belief> interim;
    for (const Experiment& e : list) {
      realized.push_back(RandInt(rng, 0, e.size() - 1));
      interim.push_back(e.atoms()[realized.back()].belief);
    }
    Belief closed;
    try {
      closed = Combine(prior, interim);
    } catch (const Error& e) {
      c.Expect(e.code() == ErrorCode::kUndefinedPosterior, "unexpected combine error");
      bool raw_fails = false;
      try {
        RawPosterior(structures, realized, prior);
      } catch (const Error& r) {
        raw_fails = r.code() == ErrorCode::kZeroProbabilityEvent;
      }
      c.Expect(raw_fails, "combine undefined but the raw event has mass");
      continue;
    }
    ++instances;
    c.Expect(closed == RawPosterior(structures, realized, prior),
             "combine disagrees at prior " + prior.ToString());
    if (instances % 10 == 0) {
      c.Expect(Product(prior, list) == RawPosteriorLaw(prior, structures),
               "product law disagrees at prior " + prior.ToString());
    }
  }
  Belief half({Frac(1, 2), Frac(1, 2)});
  SignalStructure s{{{Frac(2, 5), Frac(3, 5)}, {Frac(3, 5), Frac(2, 5)}}};
  c.Expect(RawPosterior({s, s}, {1, 1}, half) == Belief({Frac(9, 13), Frac(4, 13)}),
           "worked posterior (9/13, 4/13)");
  Experiment e(half, {{Belief({Frac(3, 5), Frac(2, 5)}), Frac(1, 2)},
                      {Belief({Frac(2, 5), Frac(3, 5)}), Frac(1, 2)}});
  Experiment joint = Product(half, {e, e});
  std::vector<Rational> masses;
  for (const Atom& a : joint.atoms()) masses.push_back(a.mass);
  c.Expect(masses == std::vector<Rational>{Frac(13, 50), Frac(12, 25), Frac(13, 50)},
           "three-atom product masses");
  double secs = Seconds(start);
  c.Expect(secs < 60, "runtime over 60 s");
  summary = std::to_string(instances) + " instances, " + std::to_string(secs) + " s";
}

// Full revelation is a trivial equilibrium of every zero-sum game.
void TrivialEquilibrium(Check& c, std::string& summary) {
  std::mt19937_64 rng(202);
  for (int k = 0; k < 100; ++k) {
    const int n = RandInt(rng, 2, 4);
    const int m = RandInt(rng, 2, 3);
    GamePayoffs g = testing::RandomNormalizedGame(n, m, rng);
    Belief prior = testing::RandomPrior(n, rng);
    StrategyProfile fr = ConstructFullyRevealing(prior, m);
    for (int i = 0; i < m; ++i) {
      c.Expect(ExpectedUtility(g, fr, i) == 0, "nonzero payoff in game " + std::to_string(k));
    }
    VerifyReport v = VerifyProfile(g, fr, 4);
    c.Expect(v.looks_equilibrium, "verifier rejects game " + std::to_string(k) +
                                      " (" + v.reason + ")");
  }
  summary = "100 games";
}

// The two-state example with a jump at 3/5.
void JumpExample(Check& c, std::string& summary) {
  GamePayoffs g = testing::JumpGame();
  Belief prior({Frac(1, 2), Frac(1, 2)});
  for (int k = 0; k <= 20; ++k) {
    Rational t = Frac(k, 20);
    Rational want = t < Frac(3, 5) ? t : 1 - t;
    c.Expect(g.utilities[0].Eval(Belief({1 - t, t})) == want,
             "u_1 at t = " + ToString(t));
  }
  Experiment u = Experiment::Uninformative(prior);
  c.Expect(ConditionalPayoff(g, StrategyProfile({u, u}), 0,
                             Belief({Frac(2, 5), Frac(3, 5)})) == Frac(2, 5),
           "W_1 at 3/5 against the uninformative experiment");
  int attacked = 0;
  for (const Experiment& other : EnumerateGridStrategies(prior, GridSpec{10, 10, 3})) {
    if (other.IsFullyRevealing()) continue;
    ++attacked;
    StrategyProfile p({u, other});
    std::string label = "opponent " + std::to_string(attacked);
    try {
      ExploitCertificate cert = SynthesizeExploit(g, p, StateSet::Pair(0, 1));
      StrategyProfile after = ApplyCertificate(p, cert);
      c.Expect(cert.payoff > 0, label + ": nonpositive certificate");
      c.Expect(!CheckBayesPlausible(cert.deviation.experiment), label + ": illegal deviation");
      c.Expect(ExpectedUtility(g, after, cert.sender) == cert.payoff,
               label + ": recomputed payoff differs");
    } catch (const Error& e) {
      c.Expect(false, label + ": " + e.what());
    }
  }
  summary = std::to_string(attacked) + " non-revealing opponents";
}

// The pooled set of a non-revealing verdict, and whether the scan agrees.
void CompareWithScan(Check& c, const GamePayoffs& g, const Belief& prior,
                     const GridSpec& grid, const std::string& label) {
  RevelationReport rep = ClassifyFullRevelation(g);
  FullRevelationScanResult scan = FullRevelationScan(g, prior, grid);
  if (rep.full_revelation) {
    c.Expect(scan.only_fully_revealing, label + ": scan found a pooling equilibrium");
    return;
  }
  StrategyProfile pool = ConstructPoolingEquilibrium(g, prior, *rep.pooled_pair);
  c.Expect(VerifyProfile(g, pool, grid.belief_resolution).looks_equilibrium,
           label + ": verifier rejects the pooling equilibrium");
  auto candidates = EnumerateGridStrategies(prior, grid);
  for (int i = 0; i < pool.num_senders(); ++i) {
    c.Expect(!BestResponseScan(g, pool, i, candidates).improved,
             label + ": scan improves on the pooling equilibrium");
  }
  c.Expect(!scan.only_fully_revealing, label + ": scan finds no pooling equilibrium");
}

void TheoremVsOracle(Check& c, std::string& summary) {
  auto start = Clock::now();
  std::mt19937_64 rng(404);
  Belief half({Frac(1, 2), Frac(1, 2)});
  int binary = 0, ternary = 0, pooling = 0;
  for (int k = 0; k < 60; ++k, ++binary) {
    // Every fifth game is zero on the edge so both verdicts occur.
    auto knots = k % 5 == 4 ? std::vector<Rational>(6, Rational(0))
                            : testing::RandomBinaryKnots(5, rng);
    GamePayoffs g = testing::BinaryGridGame(knots);
    pooling += ClassifyFullRevelation(g).full_revelation ? 0 : 1;
    CompareWithScan(c, g, half, GridSpec{5, 4, 3}, "binary " + std::to_string(k));
  }
  Belief third = Belief::Uniform(3);
  for (int k = 0; k < 12; ++k, ++ternary) {
    GamePayoffs g = testing::TernaryGridGame(4, testing::RandomTernaryValues(4, rng));
    pooling += ClassifyFullRevelation(g).full_revelation ? 0 : 1;
    CompareWithScan(c, g, third, GridSpec{4, 3, 3}, "ternary " + std::to_string(k));
  }
  double secs = Seconds(start);
  c.Expect(secs < 600, "runtime over 10 min");
  summary = std::to_string(binary) + " binary, " + std::to_string(ternary) +
            " ternary, " + std::to_string(pooling) + " pooling, " +
            std::to_string(secs) + " s";
}

std::vector<StateSet> SubsetsOfSize2Plus(int n) {
  std::vector<StateSet> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    std::vector<int> m;
    for (int l = 0; l < n; ++l) {
      if (mask & (1u << l)) m.push_back(l);
    }
    out.emplace_back(m);
  }
  return out;
}

void Duality(Check& c, std::string& summary) {
  std::mt19937_64 rng(505);
  int sets = 0, poolable = 0;
  for (int k = 0; k < 20; ++k) {
    GamePayoffs g = k % 2 == 0
                        ? testing::TernaryGridGame(3 + k % 3, testing::RandomTernaryValues(3 + k % 3, rng))
                        : testing::RandomNormalizedGame(3, 2, rng);
    Belief prior = k % 4 < 2 ? Belief::Uniform(3) : testing::RandomPrior(3, rng);
    Experiment u = Experiment::Uninformative(prior);
    StrategyProfile babble({u, u});
    for (const StateSet& omega : SubsetsOfSize2Plus(3)) {
      ++sets;
      std::string label = "game " + std::to_string(k) + " " + omega.ToString();
      PoolingVerdict v = ClassifyPooling(g, omega);
      bool construct = false;
      try {
        construct = VerifyProfile(g, ConstructPoolingEquilibrium(g, prior, omega), 6)
                        .looks_equilibrium;
      } catch (const Error&) {
      }
      bool exploit = false;
      try {
        ExploitCertificate cert = SynthesizeExploit(g, babble, omega);
        exploit = cert.payoff > 0 &&
                  ExpectedUtility(g, ApplyCertificate(babble, cert), cert.sender) == cert.payoff;
      } catch (const Error&) {
      }
      poolable += construct ? 1 : 0;
      c.Expect(construct != exploit, label + ": both or neither side succeeds");
      c.Expect(exploit == v.never_pooled, label + ": disagrees with the classifier");
    }
  }
  summary = std::to_string(sets) + " sets, " + std::to_string(poolable) + " poolable";
}

void FiniteActions(Check& c, std::string& summary) {
  std::mt19937_64 rng(606);
  int edges = 0, equilibria = 0;
  for (int k = 0; k < 500; ++k) {
    const int n = RandInt(rng, 2, 4);
    ActionGame ag = testing::RandomActionGame(n, RandInt(rng, 2, 4), rng);
    std::string label = "table " + std::to_string(k);
    GamePayoffs g = NormalizePayoffs(InducedPayoffs(ag));
    for (int l = 0; l < n; ++l) {
      for (int j = l + 1; j < n; ++j, ++edges) {
        bool same = BestAction(ag, Belief::Vertex(n, l)) == BestAction(ag, Belief::Vertex(n, j));
        for (const auto& v : g.utilities) {
          c.Expect(IsZeroOnSubsimplex(v, StateSet::Pair(l, j)).zero == same,
                   label + ": edge verdict differs from vertex actions");
        }
      }
    }
    c.Expect(ClassifyActionGame(ag).full_revelation == ClassifyFullRevelation(g).full_revelation,
             label + ": action classifier disagrees");
    std::vector<StrategyProfile> built{ConstructFullyRevealing(ag.prior, 2)};
    for (const StateSet& omega : SubsetsOfSize2Plus(n)) {
      if (!ClassifyPooling(g, omega).never_pooled) {
        built.push_back(ConstructPoolingEquilibrium(g, ag.prior, omega));
      }
    }
    for (const StrategyProfile& p : built) {
      ++equilibria;
      c.Expect(FirstBestCheck(ag, p).always, label + ": first best fails");
    }
  }
  summary = "500 tables, " + std::to_string(edges) + " edges, " +
            std::to_string(equilibria) + " equilibria";
}

void Robustness(Check& c, std::string& summary) {
  int zero_sum = 0;
  for (const char* name : {"figure1", "example_b51", "example_b21", "bump", "all_zero",
                           "matching_action_game"}) {
    GamePayoffs g = io::LoadScenario(Fixture(name)).Payoffs();
    ZeroSumReport z = CheckZeroSum(g, 2000);
    SurplusSufficiency s = StrictSurplusSufficiency(g);
    if (std::string(name) == "example_b21") {
      c.Expect(!z.ok(), "example_b21 should not be zero-sum");
      c.Expect(s.holds, "example_b21: sufficiency should hold");
      continue;
    }
    c.Expect(z.ok() && z.exact_on_edges, std::string(name) + ": not exactly zero-sum");
    ++zero_sum;
    SurplusResult ms = MaxTotalSurplus(g);
    c.Expect(ms.value == 0 && ms.exact, std::string(name) + ": surplus " + ToString(ms.value));
    c.Expect(!s.holds, std::string(name) + ": sufficiency should be inconclusive");
  }
  summary = std::to_string(zero_sum) + " zero-sum fixtures";
}

// The same utility with its pieces replaced by disjoint cells in reverse
// order; evaluation is unchanged because the cells do not overlap.
PiecewiseAffineUtility Reordered(const PiecewiseAffineUtility& u) {
  std::vector<Piece> pieces;
  for (Cell& cell : FirstMatchCells(u)) {
    pieces.push_back({std::move(cell.constraints), std::move(cell.form)});
  }
  std::reverse(pieces.begin(), pieces.end());
  return PiecewiseAffineUtility(u.num_states(), std::move(pieces));
}

bool SameReport(const Condition1Report& a, const Condition1Report& b) {
  if (a.satisfied != b.satisfied || a.edges.size() != b.edges.size()) return false;
  for (std::size_t e = 0; e < a.edges.size(); ++e) {
    const Condition1Edge& x = a.edges[e];
    const Condition1Edge& y = b.edges[e];
    if (x.satisfied != y.satisfied || x.sender != y.sender ||
        x.slope_at_l != y.slope_at_l || x.slope_at_k != y.slope_at_k) {
      return false;
    }
  }
  return true;
}

void ConditionOne(Check& c, std::string& summary) {
  struct Case {
    const char* name;
    bool satisfied;
  };
  int reorderings = 0;
  for (const Case& k : {Case{"figure1", true}, Case{"bump", false}, Case{"all_zero", false}}) {
    GamePayoffs g = io::LoadScenario(Fixture(k.name)).Payoffs();
    Condition1Report r = Condition1(g);
    c.Expect(r.satisfied == k.satisfied, std::string(k.name) + ": wrong verdict");
    GamePayoffs shuffled;
    for (const auto& u : g.utilities) shuffled.utilities.push_back(Reordered(u));
    shuffled.normalized = g.normalized;
    for (int s = 0; s <= 20; ++s) {
      Belief b({1 - Frac(s, 20), Frac(s, 20)});
      for (int i = 0; i < g.num_senders(); ++i) {
        c.Expect(shuffled.utilities[i].Eval(b) == g.utilities[i].Eval(b),
                 std::string(k.name) + ": reordering changed the utility");
      }
    }
    ++reorderings;
    c.Expect(SameReport(Condition1(shuffled), r),
             std::string(k.name) + ": report changed under reordering");
  }
  summary = std::to_string(reorderings) + " reordered fixtures";
}

}  // namespace
}  // namespace persuasion

int main() {
  using persuasion::Check;
  struct Criterion {
    const char* title;
    std::function<void(Check&, std::string&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"posterior engine", persuasion::PosteriorEngine},
      {"fully revealing profile is an equilibrium", persuasion::TrivialEquilibrium},
      {"two-state jump example", persuasion::JumpExample},
      {"full revelation classifier vs grid oracle", persuasion::TheoremVsOracle},
      {"pooling duality", persuasion::Duality},
      {"finite-action receiver", persuasion::FiniteActions},
      {"surplus checks", persuasion::Robustness},
      {"end-slope condition detector", persuasion::ConditionOne},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check check;
    std::string summary;
    try {
      criteria[k].run(check, summary);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("uncaught: ") + e.what());
    }
    const bool pass = check.failures() == 0;
    failed += pass ? 0 : 1;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << k + 1 << ": "
              << criteria[k].title;
    if (!summary.empty()) std::cout << " (" << summary << ")";
    if (!pass) std::cout << " [" << check.failures() << " failures]";
    std::cout << "\n" << check.notes() << std::flush;
  }
  return failed == 0 ? 0 : 1;
}
