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


#include "persuasion/receiver.h"

#include <algorithm>

#include "persuasion/errors.h"

namespace persuasion {

namespace {

std::string Label(const ActionGame& ag, int a) {
  return ag.actions[a].empty() ? std::to_string(a + 1) : ag.actions[a];
}

void CheckTable(const ActionGame& ag,
                const std::vector<std::vector<Rational>>& table,
                const std::string& who) {
  const int n = ag.num_states();
  if (static_cast<int>(table.size()) != ag.num_actions()) {
    Fail(ErrorCode::kMalformedInput, who + " table needs one row per action");
  }
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) {
      Fail(ErrorCode::kMalformedInput, who + " table needs one entry per state");
    }
  }
  for (int l = 0; l < n; ++l) {
    for (int a = 0; a < ag.num_actions(); ++a) {
      for (int b = a + 1; b < ag.num_actions(); ++b) {
        if (table[a][l] == table[b][l]) {
          Fail(ErrorCode::kInvariantViolation,
               who + " is indifferent between " + Label(ag, a) + " and " +
                   Label(ag, b) + " at state " + std::to_string(l + 1));
        }
      }
    }
  }
}

AffineForm ActionForm(const std::vector<Rational>& row) {
  AffineForm f = AffineForm::Zero(static_cast<int>(row.size()));
  f.coeffs = row;
  return f;
}

}  // namespace

void ValidateActionGame(const ActionGame& ag) {
  if (ag.num_actions() < 1) Fail(ErrorCode::kMalformedInput, "no actions");
  if (ag.num_senders() < 1) Fail(ErrorCode::kMalformedInput, "no senders");
  CheckTable(ag, ag.receiver, "receiver");
  for (int i = 0; i < ag.num_senders(); ++i) {
    CheckTable(ag, ag.senders[i], "sender " + std::to_string(i + 1));
  }
  for (int a = 0; a < ag.num_actions(); ++a) {
    for (int l = 0; l < ag.num_states(); ++l) {
      Rational total = 0;
      for (const auto& table : ag.senders) total += table[a][l];
      if (total != 0) {
        Fail(ErrorCode::kInvariantViolation,
             "sender payoffs sum to " + ToString(total) + " at action " +
                 Label(ag, a) + ", state " + std::to_string(l + 1));
      }
    }
  }
}

Rational ReceiverValue(const ActionGame& ag, int action, const Belief& b) {
  Rational v = 0;
  for (int l = 0; l < b.num_states(); ++l) v += ag.receiver[action][l] * b[l];
  return v;
}

int BestAction(const ActionGame& ag, const Belief& b) {
  int best = 0;
  Rational best_value = ReceiverValue(ag, 0, b);
  for (int a = 1; a < ag.num_actions(); ++a) {
    Rational v = ReceiverValue(ag, a, b);
    if (v > best_value) {
      best = a;
      best_value = v;
    }
  }
  return best;
}

Rational InducedPayoff(const ActionGame& ag, int sender, const Belief& b) {
  const auto& row = ag.senders[sender][BestAction(ag, b)];
  Rational v = 0;
  for (int l = 0; l < b.num_states(); ++l) v += row[l] * b[l];
  return v;
}

PiecewiseAffineUtility InducedUtility(const ActionGame& ag, int sender) {
  const int n = ag.num_states();
  std::vector<Piece> pieces;
  for (int a = 0; a < ag.num_actions(); ++a) {
    Piece p;
    for (int other = 0; other < ag.num_actions(); ++other) {
      if (other == a) continue;
      AffineForm diff =
          ActionForm(ag.receiver[a]) - ActionForm(ag.receiver[other]);
      p.guard.push_back(
          {diff, other < a ? Relation::kGreater : Relation::kGreaterEqual});
    }
    p.form = ActionForm(ag.senders[sender][a]);
    pieces.push_back(std::move(p));
  }
  return PiecewiseAffineUtility(n, std::move(pieces));
}

GamePayoffs InducedPayoffs(const ActionGame& ag) {
  GamePayoffs g;
  for (int i = 0; i < ag.num_senders(); ++i) {
    g.utilities.push_back(InducedUtility(ag, i));
  }
  return g;
}

EdgeFunction InducedEdge(const ActionGame& ag, int sender, int l, int k) {
  const int n = ag.num_states();
  const int count = ag.num_actions();
  // Receiver line of action a along the edge: c_a + s_a t.
  std::vector<Rational> c(count), s(count);
  for (int a = 0; a < count; ++a) {
    c[a] = ag.receiver[a][l];
    s[a] = ag.receiver[a][k] - ag.receiver[a][l];
  }
  std::vector<Rational> cuts{Rational(0), Rational(1)};
  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      if (s[a] == s[b]) continue;
      Rational t = (c[b] - c[a]) / (s[a] - s[b]);
      if (t > 0 && t < 1) cuts.push_back(t);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  auto value_at = [&](const Rational& t, int* action) {
    Belief b = EdgePoint(n, l, k, t);
    *action = BestAction(ag, b);
    return InducedPayoff(ag, sender, b);
  };
  std::vector<Rational> values;
  std::vector<EdgeFunction::Segment> segments;
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    int action;
    values.push_back(value_at(cuts[j], &action));
    if (j + 1 < cuts.size()) {
      value_at((cuts[j] + cuts[j + 1]) / 2, &action);
      const auto& row = ag.senders[sender][action];
      segments.push_back({row[l], row[k] - row[l]});
    }
  }
  return EdgeFunction(std::move(cuts), std::move(values), std::move(segments));
}

ActionClassification ClassifyActionGame(const ActionGame& ag) {
  ValidateActionGame(ag);
  ActionClassification out;
  const int n = ag.num_states();
  for (int l = 0; l < n; ++l) {
    out.vertex_actions.push_back(BestAction(ag, Belief::Vertex(n, l)));
  }
  for (int l = 0; l < n && !out.pair; ++l) {
    for (int k = l + 1; k < n && !out.pair; ++k) {
      if (out.vertex_actions[l] == out.vertex_actions[k]) {
        out.full_revelation = false;
        out.pair = {l, k};
      }
    }
  }
  return out;
}

FirstBestReport FirstBestCheck(const ActionGame& ag,
                               const StrategyProfile& profile) {
  FirstBestReport out;
  const int n = ag.num_states();
  Experiment joint = Product(profile);
  for (const Atom& atom : joint.atoms()) {
    int action = BestAction(ag, atom.belief);
    for (int l : atom.belief.Support()) {
      int first_best = BestAction(ag, Belief::Vertex(n, l));
      if (action != first_best) {
        out.always = false;
        out.posterior = atom.belief;
        out.state = l;
        out.action = action;
        out.first_best = first_best;
        return out;
      }
    }
  }
  return out;
}

}  // namespace persuasion
