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


// JSON forms of scenarios, profiles, certificates and reports. Rationals are
// written as canonical "p/q" strings; states are numbered from 1.

#ifndef PERSUASION_TOOLS_SCENARIO_H_
#define PERSUASION_TOOLS_SCENARIO_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "persuasion/analysis.h"
#include "persuasion/equilibrium.h"
#include "persuasion/experiment.h"
#include "persuasion/oracle.h"
#include "persuasion/receiver.h"
#include "persuasion/utility.h"

namespace persuasion::io {

using Json = nlohmann::json;

struct Scenario {
  std::string name;
  Belief prior;
  int num_senders = 0;
  // Exactly one of the two is set.
  std::optional<GamePayoffs> payoffs;
  std::optional<ActionGame> action_game;
  std::map<std::string, StrategyProfile> profiles;
  // When set, the file lists M - 1 utilities and the last sender receives
  // the negated sum, so zero-sum holds by construction.
  bool structural_zero_sum = false;

  int num_states() const { return prior.num_states(); }
  // Raw payoffs, induced from the action game when necessary.
  GamePayoffs RawPayoffs() const;
  // Normalized payoffs used by every analysis.
  GamePayoffs Payoffs() const;
};

// Every loader throws Error(kMalformedInput) on schema violations and
// revalidates the invariants of the types it builds.
Scenario ScenarioFromJson(const Json& j);
Scenario LoadScenario(const std::string& path);
Json ScenarioToJson(const Scenario& s);
Json ReadJsonFile(const std::string& path);

Json RationalToJson(const Rational& q);
Rational RationalFromJson(const Json& j);
Json BeliefToJson(const Belief& b);
Belief BeliefFromJson(const Json& j);
Json StateSetToJson(const StateSet& s);
StateSet StateSetFromJson(const Json& j, int num_states);
// Parses "1,2" or "{1,2}" into a 0-based set.
StateSet ParseStateSet(const std::string& text, int num_states);

Json ExperimentToJson(const Experiment& e);
Experiment ExperimentFromJson(const Json& j, const Belief& prior);
Json ProfileToJson(const StrategyProfile& p);
// Accepts a list of experiments or {"experiments": [...]}; each entry may
// also be the string "uninformative" or "fully_revealing".
StrategyProfile ProfileFromJson(const Json& j, const Belief& prior,
                                int num_senders);

Json UtilityToJson(const PiecewiseAffineUtility& u);
PiecewiseAffineUtility UtilityFromJson(const Json& j, int num_states);
Json ActionGameToJson(const ActionGame& ag);
ActionGame ActionGameFromJson(const Json& j, const Belief& prior);

Json EdgeFunctionToJson(const EdgeFunction& f);

Json CertificateToJson(const ExploitCertificate& c);
ExploitCertificate CertificateFromJson(const Json& j, const Belief& prior);
Json VerifyReportToJson(const VerifyReport& r);
VerifyReport VerifyReportFromJson(const Json& j, const Belief& prior);

Json PoolingVerdictToJson(const PoolingVerdict& v);
Json RevelationReportToJson(const RevelationReport& r);
Json Condition1ToJson(const Condition1Report& r);
Json SurplusSufficiencyToJson(const SurplusSufficiency& s);
Json SurplusToJson(const SurplusResult& s);
Json ZeroSumToJson(const ZeroSumReport& r);
Json ScanResultToJson(const FullRevelationScanResult& r);

std::string Dump(const Json& j);

}  // namespace persuasion::io

#endif  // PERSUASION_TOOLS_SCENARIO_H_
