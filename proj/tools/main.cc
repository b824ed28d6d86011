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


// Command-line front end. Every command prints JSON on standard output;
// failures print {"error": ..., "message": ...} on standard error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "persuasion/analysis.h"
#include "persuasion/equilibrium.h"
#include "persuasion/errors.h"
#include "persuasion/oracle.h"
#include "persuasion/receiver.h"
#include "scenario.h"

namespace {

using persuasion::Belief;
using persuasion::ErrorCode;
using persuasion::Fail;
using persuasion::Rational;
using persuasion::StrategyProfile;
using persuasion::io::Json;
namespace io = persuasion::io;

constexpr int kZeroSumSamples = 2000;

void Print(const Json& j) { std::cout << io::Dump(j); }

StrategyProfile ResolveProfile(const io::Scenario& s, const std::string& name,
                               const std::string& file) {
  if (!file.empty()) {
    return io::ProfileFromJson(io::ReadJsonFile(file), s.prior, s.num_senders);
  }
  auto it = s.profiles.find(name);
  if (it == s.profiles.end()) {
    Fail(ErrorCode::kMalformedInput, "scenario has no profile \"" + name + "\"");
  }
  return it->second;
}

int Validate(const std::string& path) {
  io::Scenario s = io::LoadScenario(path);
  persuasion::GamePayoffs raw = s.RawPayoffs();
  Json gaps = Json::array();
  for (int i = 0; i < raw.num_senders(); ++i) {
    if (auto gap = persuasion::FindCoverageGap(raw.utilities[i], 1000, 1)) {
      Fail(ErrorCode::kInvariantViolation,
           "no piece of sender " + std::to_string(i + 1) + " matches " +
               gap->ToString());
    }
  }
  Json out = {{"valid", true},
              {"states", s.num_states()},
              {"senders", s.num_senders},
              {"kind", s.payoffs ? "payoffs" : "action_game"},
              {"normalized", persuasion::VanishesAtVertices(raw)},
              {"zero_sum", io::ZeroSumToJson(
                               persuasion::CheckZeroSum(raw, kZeroSumSamples))},
              {"profiles", s.profiles.size()}};
  Print(out);
  return 0;
}

int Analyze(const std::string& path, bool csv) {
  io::Scenario s = io::LoadScenario(path);
  persuasion::GamePayoffs g = s.Payoffs();
  persuasion::RevelationReport rev = persuasion::ClassifyFullRevelation(g);
  if (csv) {
    std::cout << "l,k,verdict,sender,witness\n";
    for (const auto& e : rev.edges) {
      std::cout << e.omega[0] + 1 << "," << e.omega[1] + 1 << ","
                << (e.never_pooled ? "NeverPooled" : "Poolable") << ",";
      if (e.never_pooled) {
        std::cout << e.witness_sender + 1 << ",\"" << e.witness->ToString()
                  << "\"";
      } else {
        std::cout << ",";
      }
      std::cout << "\n";
    }
    return 0;
  }
  Json minimal = Json::array();
  for (const auto& m : persuasion::MinimalSubsets(g)) {
    minimal.push_back(io::StateSetToJson(m));
  }
  Json out = {
      {"overall", rev.full_revelation ? "FullRevelation" : "NonRevealing"},
      {"revelation", io::RevelationReportToJson(rev)},
      {"minimal_subsets", minimal},
      {"condition1", io::Condition1ToJson(persuasion::Condition1(g))},
      {"surplus_sufficiency",
       io::SurplusSufficiencyToJson(persuasion::StrictSurplusSufficiency(g))},
      {"max_total_surplus", io::SurplusToJson(persuasion::MaxTotalSurplus(g))},
      {"zero_sum",
       io::ZeroSumToJson(persuasion::CheckZeroSum(g, kZeroSumSamples))}};
  Print(out);
  return 0;
}

int Construct(const std::string& path, bool fully_revealing,
              const std::string& pool) {
  io::Scenario s = io::LoadScenario(path);
  if (fully_revealing == !pool.empty()) {
    Fail(ErrorCode::kMalformedInput,
         "give exactly one of --fully-revealing and --pool");
  }
  StrategyProfile p =
      fully_revealing
          ? persuasion::ConstructFullyRevealing(s.prior, s.num_senders)
          : persuasion::ConstructPoolingEquilibrium(
                s.Payoffs(), s.prior, io::ParseStateSet(pool, s.num_states()));
  Print(io::ProfileToJson(p));
  return 0;
}

int Exploit(const std::string& path, const std::string& profile,
            const std::string& profile_file, const std::string& set,
            int shrink_steps) {
  io::Scenario s = io::LoadScenario(path);
  StrategyProfile p = ResolveProfile(s, profile, profile_file);
  persuasion::ExploitOptions options;
  options.shrink_steps = shrink_steps;
  auto cert = persuasion::SynthesizeExploit(
      s.Payoffs(), p, io::ParseStateSet(set, s.num_states()), options);
  Print(io::CertificateToJson(cert));
  return 0;
}

int Verify(const std::string& path, const std::string& profile,
           const std::string& profile_file, int grid) {
  io::Scenario s = io::LoadScenario(path);
  StrategyProfile p = ResolveProfile(s, profile, profile_file);
  if (grid < 1) Fail(ErrorCode::kMalformedInput, "--grid must be positive");
  Print(io::VerifyReportToJson(persuasion::VerifyProfile(s.Payoffs(), p, grid)));
  return 0;
}

int Induce(const std::string& path) {
  io::Scenario s = io::LoadScenario(path);
  if (!s.action_game) {
    Fail(ErrorCode::kPreconditionFailed, "scenario has no action game");
  }
  const persuasion::ActionGame& ag = *s.action_game;
  persuasion::GamePayoffs g = s.Payoffs();
  persuasion::ActionClassification cls = persuasion::ClassifyActionGame(ag);
  Json edges = Json::array();
  for (int l = 0; l < ag.num_states(); ++l) {
    for (int k = l + 1; k < ag.num_states(); ++k) {
      Json senders = Json::array();
      for (int i = 0; i < ag.num_senders(); ++i) {
        senders.push_back(
            io::EdgeFunctionToJson(persuasion::EdgeRestriction(g.utilities[i], l, k)));
      }
      edges.push_back({{"edge", {l + 1, k + 1}}, {"senders", senders}});
    }
  }
  Json vertex_actions = Json::array();
  for (int a : cls.vertex_actions) vertex_actions.push_back(ag.actions[a]);
  Json out = {{"edges", edges},
              {"vertex_actions", vertex_actions},
              {"overall", cls.full_revelation ? "FullRevelation" : "NonRevealing"}};
  if (cls.pair) out["pair"] = {cls.pair->first + 1, cls.pair->second + 1};
  Print(out);
  return 0;
}

void WriteScanCsv(const std::string& csv_path, const io::Scenario& s,
                  const persuasion::GamePayoffs& g,
                  const persuasion::GridSpec& grid, std::uint64_t cap) {
  std::ofstream out(csv_path);
  if (!out) Fail(ErrorCode::kMalformedInput, "cannot write " + csv_path);
  auto strategies = persuasion::EnumerateGridStrategies(s.prior, grid, cap);
  std::vector<persuasion::SignalStructure> structures;
  for (const auto& e : strategies) {
    structures.push_back(persuasion::ToSignalStructure(e));
  }
  const int m = s.num_senders;
  out << "profile";
  for (int i = 0; i < m; ++i) out << ",strategy_" << i + 1;
  for (int i = 0; i < m; ++i) out << ",payoff_" << i + 1;
  out << "\n";
  if (strategies.empty()) return;
  std::vector<int> pick(m, 0);
  for (std::uint64_t index = 0;; ++index) {
    std::vector<persuasion::SignalStructure> base;
    for (int i = 0; i < m; ++i) base.push_back(structures[pick[i]]);
    out << index;
    for (int i = 0; i < m; ++i) out << "," << pick[i];
    for (int i = 0; i < m; ++i) {
      out << "," << persuasion::ToString(persuasion::OracleExpectedUtility(
                        g.utilities[i], s.prior, base));
    }
    out << "\n";
    int i = 0;
    while (i < m && ++pick[i] == static_cast<int>(strategies.size())) pick[i++] = 0;
    if (i == m) break;
  }
}

int OracleScan(const std::string& path, const persuasion::GridSpec& grid,
               std::uint64_t cap, const std::string& csv_path) {
  io::Scenario s = io::LoadScenario(path);
  grid.Validate();
  persuasion::GamePayoffs g = s.Payoffs();
  auto result = persuasion::FullRevelationScan(g, s.prior, grid, cap);
  if (!csv_path.empty()) WriteScanCsv(csv_path, s, g, grid, cap);
  Json out = io::ScanResultToJson(result);
  out["grid"] = {{"belief_resolution", grid.belief_resolution},
                 {"mass_resolution", grid.mass_resolution},
                 {"max_support", grid.max_support}};
  Print(out);
  return 0;
}

int EmitPlot(const std::string& path, const std::string& edge, int samples) {
  io::Scenario s = io::LoadScenario(path);
  persuasion::StateSet pair = io::ParseStateSet(edge, s.num_states());
  if (pair.size() != 2) Fail(ErrorCode::kMalformedInput, "--edge needs two states");
  if (samples < 1) Fail(ErrorCode::kMalformedInput, "--samples must be positive");
  persuasion::GamePayoffs g = s.Payoffs();
  std::vector<persuasion::EdgeFunction> f;
  for (const auto& u : g.utilities) {
    f.push_back(persuasion::EdgeRestriction(u, pair[0], pair[1]));
  }
  std::vector<Rational> ts;
  for (int j = 0; j <= samples; ++j) ts.push_back(persuasion::Frac(j, samples));
  for (const auto& fi : f) {
    ts.insert(ts.end(), fi.breakpoints().begin(), fi.breakpoints().end());
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::cout << "# decimal approximations; t is the weight on state "
            << pair[1] + 1 << " along the edge from state " << pair[0] + 1
            << "\n";
  std::cout << "t";
  for (std::size_t i = 0; i < f.size(); ++i) std::cout << ",u_" << i + 1;
  std::cout << "\n";
  char buf[64];
  for (const Rational& t : ts) {
    std::snprintf(buf, sizeof buf, "%.6f", t.get_d());
    std::cout << buf;
    for (const auto& fi : f) {
      std::snprintf(buf, sizeof buf, "%.6f", fi.Eval(t).get_d());
      std::cout << "," << buf;
    }
    std::cout << "\n";
  }
  return 0;
}

void ReportError(const std::string& code, const std::string& message) {
  std::cerr << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Competing-sender persuasion toolkit"};
  app.require_subcommand(1);
  std::string file;
  std::string profile = "both_uninformative";
  std::string profile_file;
  std::string set;
  std::string pool;
  std::string csv_path;
  std::string edge = "1,2";
  bool fully_revealing = false;
  bool csv = false;
  int grid_res = 5;
  int samples = 100;
  int shrink_steps = persuasion::ExploitOptions{}.shrink_steps;
  persuasion::GridSpec grid{5, 4, 3};
  std::uint64_t cap = persuasion::kDefaultEnumerationCap;

  auto* validate = app.add_subcommand("validate", "check scenario invariants");
  validate->add_option("scenario", file)->required();

  auto* analyze = app.add_subcommand("analyze", "classify revelation");
  analyze->add_option("scenario", file)->required();
  analyze->add_flag("--csv", csv, "per-edge rows instead of JSON");

  auto* construct = app.add_subcommand("construct", "build an equilibrium");
  construct->add_option("scenario", file)->required();
  construct->add_flag("--fully-revealing", fully_revealing);
  construct->add_option("--pool", pool, "states to pool, e.g. 2,3");

  auto* exploit = app.add_subcommand("exploit", "certify a profitable deviation");
  exploit->add_option("scenario", file)->required();
  exploit->add_option("--profile", profile, "profile name in the scenario");
  exploit->add_option("--profile-file", profile_file, "profile JSON file");
  exploit->add_option("--set", set, "pooled states, e.g. 1,2")->required();
  exploit->add_option("--shrink-steps", shrink_steps);

  auto* verify = app.add_subcommand("verify", "test a profile for deviations");
  verify->add_option("scenario", file)->required();
  verify->add_option("--profile", profile);
  verify->add_option("--profile-file", profile_file);
  verify->add_option("--grid", grid_res, "deviation grid resolution");

  auto* induce = app.add_subcommand("induce", "induced payoffs of an action game");
  induce->add_option("scenario", file)->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force checks");
  oracle->require_subcommand(1);
  auto* scan = oracle->add_subcommand("scan", "exhaustive grid equilibrium scan");
  scan->add_option("scenario", file)->required();
  scan->add_option("--belief-res", grid.belief_resolution);
  scan->add_option("--mass-res", grid.mass_resolution);
  scan->add_option("--max-support", grid.max_support);
  scan->add_option("--cap", cap);
  scan->add_option("--csv", csv_path, "write per-profile payoffs here");

  auto* plot = app.add_subcommand("emit-plot", "edge utilities as CSV");
  plot->add_option("scenario", file)->required();
  plot->add_option("--edge", edge);
  plot->add_option("--samples", samples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    ReportError("MalformedInput", e.what());
    return 1;
  }

  try {
    if (*validate) return Validate(file);
    if (*analyze) return Analyze(file, csv);
    if (*construct) return Construct(file, fully_revealing, pool);
    if (*exploit) return Exploit(file, profile, profile_file, set, shrink_steps);
    if (*verify) return Verify(file, profile, profile_file, grid_res);
    if (*induce) return Induce(file);
    if (*scan) return OracleScan(file, grid, cap, csv_path);
    if (*plot) return EmitPlot(file, edge, samples);
  } catch (const persuasion::Error& e) {
    ReportError(std::string(persuasion::ErrorCodeName(e.code())), e.what());
    return persuasion::ExitStatusFor(e.code());
  } catch (const std::exception& e) {
    ReportError("InternalError", e.what());
    return 2;
  }
  return 0;
}
