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


#include <benchmark/benchmark.h>

#include <random>

#include "persuasion/analysis.h"
#include "persuasion/equilibrium.h"
#include "persuasion/experiment.h"
#include "persuasion/oracle.h"
#include "support/games.h"

namespace persuasion {
namespace {

void BM_Product(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int n = static_cast<int>(state.range(0));
  Belief prior = testing::RandomPrior(n, rng);
  std::vector<Experiment> list;
  for (int i = 0; i < 3; ++i) list.push_back(testing::RandomExperiment(prior, 5, rng));
  for (auto _ : state) benchmark::DoNotOptimize(Product(prior, list));
}
BENCHMARK(BM_Product)->Arg(2)->Arg(3)->Arg(4);

void BM_ExploitJumpGame(benchmark::State& state) {
  GamePayoffs g = testing::JumpGame();
  Belief prior({Frac(1, 2), Frac(1, 2)});
  Experiment u = Experiment::Uninformative(prior);
  StrategyProfile p({u, u});
  for (auto _ : state) {
    benchmark::DoNotOptimize(SynthesizeExploit(g, p, StateSet::Pair(0, 1)));
  }
}
BENCHMARK(BM_ExploitJumpGame);

void BM_ExploitTernary(benchmark::State& state) {
  std::mt19937_64 rng(3);
  GamePayoffs g = testing::RandomNormalizedGame(3, 2, rng);
  while (!ClassifyPooling(g, StateSet::All(3)).never_pooled) {
    g = testing::RandomNormalizedGame(3, 2, rng);
  }
  Belief prior = Belief::Uniform(3);
  Experiment u = Experiment::Uninformative(prior);
  StrategyProfile p({u, u});
  for (auto _ : state) {
    benchmark::DoNotOptimize(SynthesizeExploit(g, p, StateSet::All(3)));
  }
}
BENCHMARK(BM_ExploitTernary);

void BM_ClassifyTernaryGrid(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const int d = static_cast<int>(state.range(0));
  GamePayoffs g = testing::TernaryGridGame(d, testing::RandomTernaryValues(d, rng));
  for (auto _ : state) benchmark::DoNotOptimize(MinimalSubsets(g));
}
BENCHMARK(BM_ClassifyTernaryGrid)->Arg(3)->Arg(4);

void BM_FullRevelationScanBinary(benchmark::State& state) {
  std::mt19937_64 rng(5);
  GamePayoffs g = testing::BinaryGridGame(testing::RandomBinaryKnots(5, rng));
  Belief prior({Frac(1, 2), Frac(1, 2)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(FullRevelationScan(g, prior, GridSpec{5, 4, 3}));
  }
}
BENCHMARK(BM_FullRevelationScanBinary)->Unit(benchmark::kMillisecond);

void BM_FullRevelationScanTernary(benchmark::State& state) {
  std::mt19937_64 rng(6);
  GamePayoffs g = testing::TernaryGridGame(4, testing::RandomTernaryValues(4, rng));
  Belief prior = Belief::Uniform(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(FullRevelationScan(g, prior, GridSpec{4, 3, 3}));
  }
}
BENCHMARK(BM_FullRevelationScanTernary)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace persuasion

BENCHMARK_MAIN();
