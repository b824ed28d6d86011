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


#include "persuasion/oracle.h"

#include <map>

#include "persuasion/errors.h"

namespace persuasion {

void GridSpec::Validate() const {
  if (belief_resolution < 1 || mass_resolution < 1 || max_support < 1) {
    Fail(ErrorCode::kMalformedInput, "grid resolutions must be positive");
  }
}

Belief RawPosterior(const std::vector<SignalStructure>& structures,
                    const std::vector<int>& realized, const Belief& prior) {
  if (structures.size() != realized.size()) {
    Fail(ErrorCode::kMalformedInput, "one realized signal per structure");
  }
  const int n = prior.num_states();
  std::vector<Rational> joint(n);
  Rational total = 0;
  for (int l = 0; l < n; ++l) {
    joint[l] = prior[l];
    for (std::size_t i = 0; i < structures.size(); ++i) {
      const auto& table = structures[i].likelihood;
      if (static_cast<int>(table.size()) != n || realized[i] < 0 ||
          realized[i] >= structures[i].num_signals()) {
        Fail(ErrorCode::kMalformedInput, "signal index out of range");
      }
      joint[l] *= table[l][realized[i]];
    }
    total += joint[l];
  }
  if (total == 0) {
    Fail(ErrorCode::kZeroProbabilityEvent, "signal tuple has probability zero");
  }
  for (Rational& v : joint) v /= total;
  return Belief(std::move(joint));
}

namespace {

// Calls visit(belief, probability) for every positive-probability tuple.
template <typename Visit>
void ForEachTuple(const Belief& prior,
                  const std::vector<SignalStructure>& structures, Visit visit) {
  const int n = prior.num_states();
  const std::size_t m = structures.size();
  std::vector<int> s(m, 0);
  for (;;) {
    Rational p = 0;
    for (int l = 0; l < n; ++l) {
      Rational v = prior[l];
      for (std::size_t i = 0; i < m && v != 0; ++i) {
        v *= structures[i].likelihood[l][s[i]];
      }
      p += v;
    }
    if (p != 0) visit(RawPosterior(structures, s, prior), p);
    std::size_t i = 0;
    while (i < m && ++s[i] == structures[i].num_signals()) s[i++] = 0;
    if (i == m) return;
  }
}

}  // namespace

Experiment RawPosteriorLaw(const Belief& prior,
                           const std::vector<SignalStructure>& structures) {
  std::map<Belief, Rational> merged;
  ForEachTuple(prior, structures,
               [&](Belief b, const Rational& p) { merged[std::move(b)] += p; });
  std::vector<Atom> atoms;
  for (auto& [b, p] : merged) atoms.push_back({b, p});
  return Experiment(prior, std::move(atoms));
}

Rational OracleExpectedUtility(const PiecewiseAffineUtility& u,
                               const Belief& prior,
                               const std::vector<SignalStructure>& structures) {
  Rational total = 0;
  ForEachTuple(prior, structures, [&](const Belief& b, const Rational& p) {
    total += p * u.Eval(b);
  });
  return total;
}

namespace {

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  long double r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r > 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(r + 0.5L);
}

std::uint64_t SaturatingAdd(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

std::uint64_t CountGridCandidates(int num_states, const GridSpec& grid) {
  grid.Validate();
  std::uint64_t points =
      Binomial(grid.belief_resolution + num_states - 1, num_states - 1);
  std::uint64_t total = 0;
  for (int s = 1; s <= grid.max_support; ++s) {
    // Supports of size s times compositions of R into s positive parts.
    total = SaturatingAdd(
        total, SaturatingMul(Binomial(points, s),
                             Binomial(grid.mass_resolution - 1, s - 1)));
  }
  return total;
}

void ForEachGridStrategy(const Belief& prior, const GridSpec& grid,
                         const std::function<void(const Experiment&)>& visit,
                         std::uint64_t cap) {
  const int n = prior.num_states();
  std::uint64_t candidates = CountGridCandidates(n, grid);
  if (candidates > cap) {
    Fail(ErrorCode::kEnumerationTooLarge,
         std::to_string(candidates) + " candidate experiments exceed the cap of " +
             std::to_string(cap));
  }
  const std::vector<Belief> points = SimplexGrid(n, grid.belief_resolution);
  const int p = static_cast<int>(points.size());
  const int r = grid.mass_resolution;
  for (int size = 1; size <= std::min(grid.max_support, p); ++size) {
    std::vector<int> support(size);
    for (int j = 0; j < size; ++j) support[j] = j;
    for (;;) {
      // Masses m_1..m_size >= 1 summing to R, in lexicographic order.
      std::vector<int> mass(size, 1);
      if (size <= r) {
        mass[size - 1] = r - (size - 1);
        for (;;) {
          std::vector<Rational> mean(n, Rational(0));
          for (int j = 0; j < size; ++j) {
            Rational w = Frac(mass[j], r);
            for (int l = 0; l < n; ++l) mean[l] += w * points[support[j]][l];
          }
          if (mean == prior.probs()) {
            std::vector<Atom> atoms;
            for (int j = 0; j < size; ++j) {
              atoms.push_back({points[support[j]], Frac(mass[j], r)});
            }
            visit(Experiment(prior, std::move(atoms)));
          }
          // Next composition: bump the rightmost movable entry before the last.
          int j = size - 2;
          int tail = mass[size - 1];
          while (j >= 0 && tail == 1) {
            tail += mass[j] - 1;
            mass[j] = 1;
            --j;
          }
          if (j < 0) break;
          ++mass[j];
          mass[size - 1] = tail - 1;
          for (int q = j + 1; q < size - 1; ++q) mass[q] = 1;
        }
      }
      int j = size - 1;
      while (j >= 0 && support[j] == p - size + j) --j;
      if (j < 0) break;
      ++support[j];
      for (int q = j + 1; q < size; ++q) support[q] = support[q - 1] + 1;
    }
  }
}

std::vector<Experiment> EnumerateGridStrategies(const Belief& prior,
                                                const GridSpec& grid,
                                                std::uint64_t cap) {
  std::vector<Experiment> out;
  ForEachGridStrategy(
      prior, grid, [&](const Experiment& e) { out.push_back(e); }, cap);
  return out;
}

namespace {

bool FullyRevealingLaw(const Experiment& law) {
  for (const Atom& a : law.atoms()) {
    if (!a.belief.IsDegenerate()) return false;
  }
  return true;
}

std::vector<SignalStructure> Structures(const StrategyProfile& profile) {
  std::vector<SignalStructure> out;
  for (const Experiment& e : profile.experiments()) {
    out.push_back(ToSignalStructure(e));
  }
  return out;
}

// Checks one candidate for sender i, replacing and stacking. `base` holds
// the structures of the profile.
ScanResult TryCandidate(const GamePayoffs& g, const Belief& prior,
                        std::vector<SignalStructure>& base, int sender,
                        const Rational& current, const SignalStructure& cand,
                        int index) {
  ScanResult out;
  SignalStructure own = base[sender];
  base[sender] = cand;
  Rational replaced =
      OracleExpectedUtility(g.utilities[sender], prior, base);
  if (replaced > current) {
    out.improved = true;
    out.gain = replaced - current;
    out.strategy = index;
    out.deviation = RawPosteriorLaw(prior, {cand});
  }
  base[sender] = own;
  if (out.improved) return out;
  base.push_back(cand);
  Rational stacked = OracleExpectedUtility(g.utilities[sender], prior, base);
  base.pop_back();
  if (stacked > current) {
    out.improved = true;
    out.gain = stacked - current;
    out.strategy = index;
    out.in_addition = true;
    out.deviation = RawPosteriorLaw(prior, {own, cand});
  }
  return out;
}

}  // namespace

ScanResult BestResponseScan(const GamePayoffs& g, const StrategyProfile& profile,
                            int sender,
                            const std::vector<Experiment>& candidates) {
  const Belief& prior = profile.prior();
  std::vector<SignalStructure> base = Structures(profile);
  Rational current = OracleExpectedUtility(g.utilities[sender], prior, base);
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    ScanResult r = TryCandidate(g, prior, base, sender, current,
                                ToSignalStructure(candidates[c]),
                                static_cast<int>(c));
    if (r.improved) return r;
  }
  return {};
}

ScanResult BestResponseScan(const GamePayoffs& g, const StrategyProfile& profile,
                            int sender, const GridSpec& grid,
                            std::uint64_t cap) {
  return BestResponseScan(g, profile, sender,
                          EnumerateGridStrategies(profile.prior(), grid, cap));
}

FullRevelationScanResult FullRevelationScan(const GamePayoffs& g,
                                            const Belief& prior,
                                            const GridSpec& grid,
                                            std::uint64_t cap) {
  const int m = g.num_senders();
  std::vector<Experiment> strategies = EnumerateGridStrategies(prior, grid, cap);
  std::vector<SignalStructure> structures;
  for (const Experiment& e : strategies) {
    structures.push_back(ToSignalStructure(e));
  }
  const std::uint64_t count = strategies.size();
  std::uint64_t profiles = 1;
  for (int i = 0; i < m; ++i) profiles = SaturatingMul(profiles, count);
  if (profiles > cap) {
    Fail(ErrorCode::kEnumerationTooLarge,
         std::to_string(profiles) + " profiles exceed the cap of " +
             std::to_string(cap));
  }
  FullRevelationScanResult out;
  out.strategies = count;
  if (count == 0) return out;
  // The deviation that broke the previous profile is tried first; it
  // usually breaks the next one too.
  int killer = -1;
  int killer_sender = 0;
  std::vector<int> pick(m, 0);
  for (;;) {
    ++out.profiles_checked;
    std::vector<SignalStructure> base;
    for (int i = 0; i < m; ++i) base.push_back(structures[pick[i]]);
    if (!FullyRevealingLaw(RawPosteriorLaw(prior, base))) {
      std::vector<Rational> current;
      for (int i = 0; i < m; ++i) {
        current.push_back(OracleExpectedUtility(g.utilities[i], prior, base));
      }
      bool broken = false;
      if (killer >= 0) {
        broken = TryCandidate(g, prior, base, killer_sender,
                              current[killer_sender], structures[killer],
                              killer)
                     .improved;
      }
      for (int i = 0; i < m && !broken; ++i) {
        for (std::size_t c = 0; c < count && !broken; ++c) {
          if (TryCandidate(g, prior, base, i, current[i], structures[c],
                           static_cast<int>(c))
                  .improved) {
            broken = true;
            killer = static_cast<int>(c);
            killer_sender = i;
          }
        }
      }
      if (!broken) {
        std::vector<Experiment> chosen;
        for (int i = 0; i < m; ++i) chosen.push_back(strategies[pick[i]]);
        out.only_fully_revealing = false;
        out.profile = StrategyProfile(std::move(chosen));
        return out;
      }
    }
    int i = 0;
    while (i < m && ++pick[i] == static_cast<int>(count)) pick[i++] = 0;
    if (i == m) break;
  }
  return out;
}

}  // namespace persuasion
