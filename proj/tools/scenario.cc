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


#include "scenario.h"

#include <fstream>
#include <sstream>

#include "persuasion/errors.h"

namespace persuasion::io {

namespace {

[[noreturn]] void Malformed(const std::string& what) {
  Fail(ErrorCode::kMalformedInput, what);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Malformed(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

int IntFrom(const Json& j, const char* what) {
  if (!j.is_number_integer()) Malformed(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<Rational> RationalsFromJson(const Json& j, int expected,
                                        const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != expected) {
    Malformed(std::string(what) + " needs " + std::to_string(expected) +
              " entries");
  }
  std::vector<Rational> out;
  for (const Json& x : j) out.push_back(RationalFromJson(x));
  return out;
}

Json RationalsToJson(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const Rational& q : v) out.push_back(RationalToJson(q));
  return out;
}

Json FormToJson(const AffineForm& f) {
  return {{"coeffs", RationalsToJson(f.coeffs)},
          {"const", RationalToJson(f.constant)}};
}

AffineForm FormFromJson(const Json& j, int n) {
  AffineForm f;
  f.coeffs = RationalsFromJson(Field(j, "coeffs"), n, "coeffs");
  f.constant = j.contains("const") ? RationalFromJson(j.at("const")) : Rational(0);
  return f;
}

std::vector<std::vector<Rational>> TableFromJson(const Json& j, int rows,
                                                 int cols, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    Malformed(std::string(what) + " needs one row per action");
  }
  std::vector<std::vector<Rational>> out;
  for (const Json& row : j) out.push_back(RationalsFromJson(row, cols, what));
  return out;
}

Json TableToJson(const std::vector<std::vector<Rational>>& t) {
  Json out = Json::array();
  for (const auto& row : t) out.push_back(RationalsToJson(row));
  return out;
}

}  // namespace

GamePayoffs Scenario::RawPayoffs() const {
  if (payoffs) return *payoffs;
  return InducedPayoffs(*action_game);
}

GamePayoffs Scenario::Payoffs() const { return NormalizePayoffs(RawPayoffs()); }

Json RationalToJson(const Rational& q) { return ToString(q); }

Rational RationalFromJson(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  Malformed("rationals must be strings such as \"3/5\" or integers");
}

Json BeliefToJson(const Belief& b) { return RationalsToJson(b.probs()); }

Belief BeliefFromJson(const Json& j) {
  if (!j.is_array() || j.empty()) Malformed("belief must be a nonempty array");
  std::vector<Rational> p;
  for (const Json& x : j) p.push_back(RationalFromJson(x));
  return Belief(std::move(p));
}

Json StateSetToJson(const StateSet& s) {
  Json out = Json::array();
  for (int l : s) out.push_back(l + 1);
  return out;
}

StateSet StateSetFromJson(const Json& j, int num_states) {
  if (!j.is_array() || j.empty()) Malformed("state set must be a nonempty array");
  std::vector<int> m;
  for (const Json& x : j) {
    int l = IntFrom(x, "state");
    if (l < 1 || l > num_states) {
      Malformed("state " + std::to_string(l) + " out of range");
    }
    m.push_back(l - 1);
  }
  return StateSet(std::move(m));
}

StateSet ParseStateSet(const std::string& text, int num_states) {
  std::string cleaned;
  for (char c : text) {
    if (c == '{' || c == '}' || c == '[' || c == ']' || c == ' ') continue;
    cleaned += c == ',' ? ' ' : c;
  }
  std::istringstream in(cleaned);
  Json arr = Json::array();
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      arr.push_back(v);
    } catch (const std::logic_error&) {
      Malformed("bad state \"" + token + "\"");
    }
  }
  return StateSetFromJson(arr, num_states);
}

Json ExperimentToJson(const Experiment& e) {
  Json atoms = Json::array();
  for (const Atom& a : e.atoms()) {
    atoms.push_back({{"belief", BeliefToJson(a.belief)},
                     {"mass", RationalToJson(a.mass)}});
  }
  return {{"atoms", atoms}};
}

Experiment ExperimentFromJson(const Json& j, const Belief& prior) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "uninformative") {
      return CanonicalExperiment(prior, CanonicalKind::kUninformative);
    }
    if (s == "fully_revealing") {
      return CanonicalExperiment(prior, CanonicalKind::kFullyRevealing);
    }
    Malformed("unknown experiment shorthand \"" + s + "\"");
  }
  const Json& atoms = Field(j, "atoms");
  if (!atoms.is_array()) Malformed("atoms must be an array");
  std::vector<Atom> out;
  for (const Json& a : atoms) {
    Belief b = BeliefFromJson(Field(a, "belief"));
    if (b.num_states() != prior.num_states()) {
      Malformed("atom belief has the wrong dimension");
    }
    out.push_back({std::move(b), RationalFromJson(Field(a, "mass"))});
  }
  return Experiment(prior, std::move(out));
}

Json ProfileToJson(const StrategyProfile& p) {
  Json list = Json::array();
  for (const Experiment& e : p.experiments()) list.push_back(ExperimentToJson(e));
  return {{"experiments", list}};
}

StrategyProfile ProfileFromJson(const Json& j, const Belief& prior,
                                int num_senders) {
  const Json& list = j.is_object() ? Field(j, "experiments") : j;
  if (!list.is_array() || static_cast<int>(list.size()) != num_senders) {
    Malformed("profile needs one experiment per sender");
  }
  std::vector<Experiment> exps;
  for (const Json& e : list) exps.push_back(ExperimentFromJson(e, prior));
  return StrategyProfile(std::move(exps));
}

Json UtilityToJson(const PiecewiseAffineUtility& u) {
  Json pieces = Json::array();
  for (const Piece& p : u.pieces()) {
    Json guard = Json::array();
    for (const Inequality& q : p.guard) {
      Json g = FormToJson(q.lhs);
      g["op"] = std::string(RelationSymbol(q.op));
      guard.push_back(g);
    }
    pieces.push_back({{"guard", guard}, {"form", FormToJson(p.form)}});
  }
  return {{"pieces", pieces}};
}

PiecewiseAffineUtility UtilityFromJson(const Json& j, int num_states) {
  const Json& list = j.is_object() ? Field(j, "pieces") : j;
  if (!list.is_array()) Malformed("pieces must be an array");
  std::vector<Piece> pieces;
  for (const Json& p : list) {
    Piece piece;
    if (p.contains("guard")) {
      if (!p.at("guard").is_array()) Malformed("guard must be an array");
      for (const Json& g : p.at("guard")) {
        const Json& op = Field(g, "op");
        if (!op.is_string()) Malformed("op must be a string");
        piece.guard.push_back(
            {FormFromJson(g, num_states), ParseRelation(op.get<std::string>())});
      }
    }
    piece.form = FormFromJson(Field(p, "form"), num_states);
    pieces.push_back(std::move(piece));
  }
  return PiecewiseAffineUtility(num_states, std::move(pieces));
}

Json ActionGameToJson(const ActionGame& ag) {
  Json senders = Json::array();
  for (const auto& t : ag.senders) senders.push_back(TableToJson(t));
  return {{"actions", ag.actions},
          {"receiver", TableToJson(ag.receiver)},
          {"senders", senders}};
}

ActionGame ActionGameFromJson(const Json& j, const Belief& prior) {
  ActionGame ag;
  ag.prior = prior;
  const Json& actions = Field(j, "actions");
  if (!actions.is_array() || actions.empty()) {
    Malformed("actions must be a nonempty array");
  }
  for (const Json& a : actions) {
    if (!a.is_string()) Malformed("action names must be strings");
    ag.actions.push_back(a.get<std::string>());
  }
  const int rows = ag.num_actions();
  const int cols = prior.num_states();
  ag.receiver = TableFromJson(Field(j, "receiver"), rows, cols, "receiver");
  const Json& senders = Field(j, "senders");
  if (!senders.is_array()) Malformed("senders must be an array");
  for (const Json& t : senders) {
    ag.senders.push_back(TableFromJson(t, rows, cols, "sender"));
  }
  ValidateActionGame(ag);
  return ag;
}

Scenario ScenarioFromJson(const Json& j) {
  Scenario s;
  if (!j.is_object()) Malformed("scenario must be an object");
  if (j.contains("name")) s.name = j.at("name").get<std::string>();
  int n = IntFrom(Field(j, "states"), "states");
  if (n < 2) Malformed("need at least two states");
  s.prior = Belief(RationalsFromJson(Field(j, "prior"), n, "prior"));
  if (!s.prior.HasFullSupport()) Malformed("prior must have full support");
  s.num_senders = IntFrom(Field(j, "senders"), "senders");
  if (s.num_senders < 1) Malformed("need at least one sender");
  const bool has_payoffs = j.contains("payoffs");
  const bool has_actions = j.contains("action_game");
  if (has_payoffs == has_actions) {
    Malformed("exactly one of payoffs and action_game must be present");
  }
  if (has_payoffs) {
    const Json& list = j.at("payoffs");
    s.structural_zero_sum = j.value("assert_zero_sum_structural", false);
    const int listed = s.num_senders - (s.structural_zero_sum ? 1 : 0);
    if (!list.is_array() || static_cast<int>(list.size()) != listed) {
      Malformed("payoffs need " + std::to_string(listed) + " utilities");
    }
    GamePayoffs g;
    for (const Json& u : list) g.utilities.push_back(UtilityFromJson(u, n));
    if (s.structural_zero_sum) {
      if (g.utilities.empty()) {
        g.utilities.push_back(PiecewiseAffineUtility::Zero(n));
      } else {
        g.utilities.push_back(SumOfUtilities(g.utilities).Negated());
      }
    }
    s.payoffs = std::move(g);
  } else {
    s.action_game = ActionGameFromJson(j.at("action_game"), s.prior);
    if (s.action_game->num_senders() != s.num_senders) {
      Malformed("action game needs one table per sender");
    }
  }
  if (j.contains("profiles")) {
    if (!j.at("profiles").is_object()) Malformed("profiles must be an object");
    for (const auto& [name, p] : j.at("profiles").items()) {
      s.profiles.emplace(name, ProfileFromJson(p, s.prior, s.num_senders));
    }
  }
  return s;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) Malformed("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    Malformed(path + ": " + e.what());
  }
}

Scenario LoadScenario(const std::string& path) {
  try {
    return ScenarioFromJson(ReadJsonFile(path));
  } catch (const Json::exception& e) {
    Malformed(path + ": " + e.what());
  }
}

Json ScenarioToJson(const Scenario& s) {
  Json j = {{"states", s.num_states()},
            {"prior", BeliefToJson(s.prior)},
            {"senders", s.num_senders}};
  if (!s.name.empty()) j["name"] = s.name;
  if (s.payoffs) {
    Json list = Json::array();
    int listed = s.num_senders - (s.structural_zero_sum ? 1 : 0);
    for (int i = 0; i < listed; ++i) {
      list.push_back(UtilityToJson(s.payoffs->utilities[i]));
    }
    j["payoffs"] = list;
    if (s.structural_zero_sum) j["assert_zero_sum_structural"] = true;
  } else {
    j["action_game"] = ActionGameToJson(*s.action_game);
  }
  if (!s.profiles.empty()) {
    Json profiles = Json::object();
    for (const auto& [name, p] : s.profiles) profiles[name] = ProfileToJson(p);
    j["profiles"] = profiles;
  }
  return j;
}

Json EdgeFunctionToJson(const EdgeFunction& f) {
  Json segments = Json::array();
  for (const auto& s : f.segments()) {
    segments.push_back({{"intercept", RationalToJson(s.intercept)},
                        {"slope", RationalToJson(s.slope)}});
  }
  return {{"breakpoints", RationalsToJson(f.breakpoints())},
          {"values", RationalsToJson(f.point_values())},
          {"segments", segments}};
}

Json CertificateToJson(const ExploitCertificate& c) {
  return {{"sender", c.sender + 1},
          {"omega", StateSetToJson(c.omega)},
          {"exploited", BeliefToJson(c.deviation.exploited)},
          {"epsilon", RationalToJson(c.deviation.epsilon)},
          {"conditional_value", RationalToJson(c.conditional_value)},
          {"payoff", RationalToJson(c.payoff)},
          {"method", c.method},
          {"deviation", ExperimentToJson(c.deviation.experiment)}};
}

ExploitCertificate CertificateFromJson(const Json& j, const Belief& prior) {
  ExploitCertificate c;
  c.sender = IntFrom(Field(j, "sender"), "sender") - 1;
  c.omega = StateSetFromJson(Field(j, "omega"), prior.num_states());
  c.deviation.exploited = BeliefFromJson(Field(j, "exploited"));
  c.deviation.epsilon = RationalFromJson(Field(j, "epsilon"));
  c.deviation.experiment = ExperimentFromJson(Field(j, "deviation"), prior);
  c.conditional_value = RationalFromJson(Field(j, "conditional_value"));
  c.payoff = RationalFromJson(Field(j, "payoff"));
  c.method = Field(j, "method").get<std::string>();
  return c;
}

Json VerifyReportToJson(const VerifyReport& r) {
  Json j = {{"verdict", r.looks_equilibrium ? "LooksEquilibrium"
                                            : "ProfitableDeviation"},
            {"payoffs", RationalsToJson(r.payoffs)}};
  if (!r.looks_equilibrium) {
    j["sender"] = r.sender + 1;
    j["gain"] = RationalToJson(r.gain);
    j["reason"] = r.reason;
    if (r.deviation) j["deviation"] = ExperimentToJson(*r.deviation);
    if (r.exploited) j["exploited"] = BeliefToJson(*r.exploited);
  }
  return j;
}

VerifyReport VerifyReportFromJson(const Json& j, const Belief& prior) {
  VerifyReport r;
  const std::string verdict = Field(j, "verdict").get<std::string>();
  if (verdict != "LooksEquilibrium" && verdict != "ProfitableDeviation") {
    Malformed("unknown verdict " + verdict);
  }
  r.looks_equilibrium = verdict == "LooksEquilibrium";
  for (const Json& x : Field(j, "payoffs")) r.payoffs.push_back(RationalFromJson(x));
  if (!r.looks_equilibrium) {
    r.sender = IntFrom(Field(j, "sender"), "sender") - 1;
    r.gain = RationalFromJson(Field(j, "gain"));
    r.reason = Field(j, "reason").get<std::string>();
    if (j.contains("deviation")) {
      r.deviation = ExperimentFromJson(j.at("deviation"), prior);
    }
    if (j.contains("exploited")) r.exploited = BeliefFromJson(j.at("exploited"));
  }
  return r;
}

Json PoolingVerdictToJson(const PoolingVerdict& v) {
  Json j = {{"set", StateSetToJson(v.omega)},
            {"verdict", v.never_pooled ? "NeverPooled" : "Poolable"},
            {"sampled", v.sampled}};
  if (v.never_pooled) {
    j["sender"] = v.witness_sender + 1;
    j["witness"] = BeliefToJson(*v.witness);
  }
  return j;
}

Json RevelationReportToJson(const RevelationReport& r) {
  Json edges = Json::array();
  for (const auto& e : r.edges) edges.push_back(PoolingVerdictToJson(e));
  Json j = {{"overall", r.full_revelation ? "FullRevelation" : "NonRevealing"},
            {"edges", edges}};
  if (r.pooled_pair) j["pooled_pair"] = StateSetToJson(*r.pooled_pair);
  return j;
}

Json Condition1ToJson(const Condition1Report& r) {
  Json edges = Json::array();
  for (const auto& e : r.edges) {
    Json row = {{"edge", {e.l + 1, e.k + 1}},
                {"satisfied", e.satisfied},
                {"slope_at_l", RationalsToJson(e.slope_at_l)},
                {"slope_at_k", RationalsToJson(e.slope_at_k)}};
    if (e.satisfied) row["sender"] = e.sender + 1;
    edges.push_back(row);
  }
  return {{"satisfied", r.satisfied}, {"edges", edges}};
}

Json SurplusSufficiencyToJson(const SurplusSufficiency& s) {
  Json j = {{"verdict", s.holds ? "SufficiencyHolds" : "Inconclusive"},
            {"exact", s.exact}};
  if (s.witness) j["witness"] = BeliefToJson(*s.witness);
  return j;
}

Json SurplusToJson(const SurplusResult& s) {
  return {{"value", RationalToJson(s.value)},
          {"exact", s.exact},
          {"argmax", BeliefToJson(s.argmax)}};
}

Json ZeroSumToJson(const ZeroSumReport& r) {
  Json j = {{"zero_sum", r.ok()}, {"exact_on_edges", r.exact_on_edges}};
  if (r.witness) j["witness"] = BeliefToJson(*r.witness);
  return j;
}

Json ScanResultToJson(const FullRevelationScanResult& r) {
  Json j = {{"verdict", r.only_fully_revealing ? "OnlyFullyRevealingFound"
                                               : "NonRevealingEquilibrium"},
            {"profiles_checked", r.profiles_checked},
            {"strategies", r.strategies}};
  if (r.profile) j["profile"] = ProfileToJson(*r.profile);
  return j;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace persuasion::io
