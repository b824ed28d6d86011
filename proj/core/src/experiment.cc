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

#include "persuasion/experiment.h"

#include <algorithm>
#include <map>

#include "persuasion/errors.h"

namespace persuasion {

Experiment::Experiment(Belief prior, std::vector<Atom> atoms)
    : prior_(std::move(prior)), atoms_(std::move(atoms)) {
  if (atoms_.empty()) Fail(ErrorCode::kMalformedInput, "experiment has no atoms");
  Rational total = 0;
  for (const Atom& a : atoms_) {
    if (a.belief.num_states() != prior_.num_states()) {
      Fail(ErrorCode::kMalformedInput, "atom dimension differs from prior");
    }
    if (a.mass <= 0) Fail(ErrorCode::kMalformedInput, "atom mass not positive");
    total += a.mass;
  }
  if (total != 1) {
    Fail(ErrorCode::kMalformedInput,
         "atom masses sum to " + ToString(total) + ", not 1");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.belief < b.belief; });
  for (std::size_t i = 1; i < atoms_.size(); ++i) {
    if (atoms_[i].belief == atoms_[i - 1].belief) {
      Fail(ErrorCode::kMalformedInput,
           "repeated atom " + atoms_[i].belief.ToString());
    }
  }
}

Experiment Experiment::FullyRevealing(const Belief& prior) {
  std::vector<Atom> atoms;
  for (int l = 0; l < prior.num_states(); ++l) {
    if (prior[l] > 0) {
      atoms.push_back({Belief::Vertex(prior.num_states(), l), prior[l]});
    }
  }
  return Experiment(prior, std::move(atoms));
}

Experiment Experiment::Uninformative(const Belief& prior) {
  return Experiment(prior, {{prior, Rational(1)}});
}

Belief Experiment::Mean() const {
  std::vector<Rational> m(num_states(), Rational(0));
  for (const Atom& a : atoms_) {
    for (int l = 0; l < num_states(); ++l) m[l] += a.mass * a.belief[l];
  }
  return Belief::Unchecked(std::move(m));
}

bool Experiment::IsFullyRevealing() const {
  return std::all_of(atoms_.begin(), atoms_.end(),
                     [](const Atom& a) { return a.belief.IsDegenerate(); });
}

Rational Experiment::MassOf(const Belief& b) const {
  auto it = std::lower_bound(
      atoms_.begin(), atoms_.end(), b,
      [](const Atom& a, const Belief& key) { return a.belief < key; });
  if (it != atoms_.end() && it->belief == b) return it->mass;
  return 0;
}

Experiment CanonicalExperiment(const Belief& prior, CanonicalKind kind) {
  if (!prior.HasFullSupport()) {
    Fail(ErrorCode::kPreconditionFailed, "prior lacks full support");
  }
  return kind == CanonicalKind::kFullyRevealing
             ? Experiment::FullyRevealing(prior)
             : Experiment::Uninformative(prior);
}

std::optional<PlausibilityViolation> CheckBayesPlausible(const Experiment& e) {
  Belief mean = e.Mean();
  if (mean == e.prior()) return std::nullopt;
  return PlausibilityViolation{e.prior(), std::move(mean)};
}

void SignalStructure::Validate() const {
  if (likelihood.empty()) Fail(ErrorCode::kMalformedInput, "no states");
  for (const auto& row : likelihood) {
    if (row.size() != likelihood[0].size()) {
      Fail(ErrorCode::kMalformedInput, "ragged signal structure");
    }
    Rational total = 0;
    for (const Rational& p : row) {
      if (p < 0) Fail(ErrorCode::kMalformedInput, "negative likelihood");
      total += p;
    }
    if (total != 1) {
      Fail(ErrorCode::kMalformedInput, "likelihood row does not sum to 1");
    }
  }
}

SignalStructure ToSignalStructure(const Experiment& e) {
  const Belief& prior = e.prior();
  SignalStructure s;
  s.likelihood.assign(prior.num_states(),
                      std::vector<Rational>(e.size(), Rational(0)));
  for (int j = 0; j < e.size(); ++j) {
    const Atom& a = e.atoms()[j];
    for (int l = 0; l < prior.num_states(); ++l) {
      s.likelihood[l][j] = a.mass * a.belief[l] / prior[l];
    }
  }
  return s;
}

StrategyProfile::StrategyProfile(std::vector<Experiment> experiments)
    : experiments_(std::move(experiments)) {
  if (experiments_.empty()) Fail(ErrorCode::kMalformedInput, "no senders");
  for (const Experiment& e : experiments_) {
    if (e.prior() != experiments_.front().prior()) {
      Fail(ErrorCode::kPriorMismatch, "experiments use different priors");
    }
    if (auto v = CheckBayesPlausible(e)) {
      Fail(ErrorCode::kInvariantViolation,
           "experiment mean " + v->got.ToString() + " differs from prior " +
               v->expected.ToString());
    }
  }
}

StrategyProfile StrategyProfile::With(int i, Experiment e) const {
  std::vector<Experiment> copy = experiments_;
  copy.at(i) = std::move(e);
  return StrategyProfile(std::move(copy));
}

std::vector<Experiment> StrategyProfile::Others(int i) const {
  std::vector<Experiment> out;
  for (int j = 0; j < num_senders(); ++j) {
    if (j != i) out.push_back(experiments_[j]);
  }
  return out;
}

namespace {

// Joint law of two conditionally independent experiments, merged by
// posterior. The pair probability is m_a m_b sum_l a_l b_l / prior_l.
Experiment PairProduct(const Belief& prior, const Experiment& a,
                       const Experiment& b) {
  const int n = prior.num_states();
  std::map<Belief, Rational> merged;
  std::vector<Rational> w(n);
  for (const Atom& x : a.atoms()) {
    for (const Atom& y : b.atoms()) {
      Rational total = 0;
      for (int l = 0; l < n; ++l) {
        if (x.belief[l] == 0 || y.belief[l] == 0) {
          w[l] = 0;
          continue;
        }
        w[l] = x.belief[l] * y.belief[l] / prior[l];
        total += w[l];
      }
      if (total == 0) continue;
      std::vector<Rational> post(n);
      for (int l = 0; l < n; ++l) post[l] = w[l] / total;
      merged[Belief::Unchecked(std::move(post))] += x.mass * y.mass * total;
    }
  }
  std::vector<Atom> atoms;
  atoms.reserve(merged.size());
  for (auto& [belief, mass] : merged) atoms.push_back({belief, mass});
  return Experiment(prior, std::move(atoms));
}

}  // namespace

Experiment Product(const Belief& prior, const std::vector<Experiment>& list,
                   std::uint64_t cap) {
  if (!prior.HasFullSupport()) {
    Fail(ErrorCode::kPreconditionFailed, "prior lacks full support");
  }
  std::uint64_t tuples = 1;
  for (const Experiment& e : list) {
    if (e.prior() != prior) {
      Fail(ErrorCode::kPriorMismatch, "experiment prior differs");
    }
    tuples *= static_cast<std::uint64_t>(e.size());
    if (tuples > cap) {
      Fail(ErrorCode::kProductTooLarge,
           "product exceeds " + std::to_string(cap) + " support tuples");
    }
  }
  if (list.empty()) return Experiment::Uninformative(prior);
  // Folding pairwise is exact: combining merged posteriors is associative.
  Experiment acc = list.front();
  for (std::size_t i = 1; i < list.size(); ++i) {
    acc = PairProduct(prior, acc, list[i]);
  }
  return acc;
}

Experiment Product(const StrategyProfile& profile, std::uint64_t cap) {
  return Product(profile.prior(), profile.experiments(), cap);
}

std::vector<ConditionalAtom> ConditionalDist(const Experiment& other,
                                             const Belief& x) {
  const Belief& prior = other.prior();
  std::vector<ConditionalAtom> out;
  for (const Atom& y : other.atoms()) {
    Rational p = 0;
    for (int k = 0; k < prior.num_states(); ++k) {
      if (x[k] == 0 || y.belief[k] == 0) continue;
      p += x[k] * y.belief[k] / prior[k];
    }
    p *= y.mass;
    if (p > 0) out.push_back({y.belief, std::move(p)});
  }
  return out;
}

}  // namespace persuasion
