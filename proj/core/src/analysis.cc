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

#include "persuasion/analysis.h"

#include <algorithm>
#include <random>
#include <set>

#include "persuasion/errors.h"
#include "persuasion/geometry.h"

namespace persuasion {
namespace {

void RequireVanishing(const PiecewiseAffineUtility& u) {
  for (int l = 0; l < u.num_states(); ++l) {
    if (u.Eval(Belief::Vertex(u.num_states(), l)) != 0) {
      Fail(ErrorCode::kNotNormalized,
           "utility is nonzero at vertex " + std::to_string(l + 1));
    }
  }
}

void RequireNormalized(const GamePayoffs& g) {
  for (const PiecewiseAffineUtility& u : g.utilities) RequireVanishing(u);
}

// Random point in the relative interior of Delta(face).
Belief RandomFacePoint(int n, const StateSet& face, std::mt19937_64& rng) {
  std::vector<Rational> local = RandomInteriorPoint(face.size(), rng);
  std::vector<Rational> full(n, Rational(0));
  for (int j = 0; j < face.size(); ++j) full[face[j]] = local[j];
  return Belief::Unchecked(std::move(full));
}

// A point of the region where the affine form f is nonzero, given its
// closure vertices and interior centroid; nullopt if f vanishes there.
std::optional<Belief> NonzeroPoint(const AffineForm& f,
                                   const RegionGeometry& geo) {
  if (f.Eval(geo.interior) != 0) return geo.interior;
  for (const Belief& v : geo.closure_vertices) {
    // f(c) = 0 and f(v) != 0, so the midpoint has value f(v) / 2.
    if (f.Eval(v) != 0) return Mix(geo.interior, v, Rational(1, 2));
  }
  return std::nullopt;
}

ZeroCheck SampledZeroCheck(const PiecewiseAffineUtility& u,
                           const StateSet& omega,
                           const ZeroCheckOptions& options) {
  ZeroCheck out;
  out.sampled = true;
  const int n = u.num_states();
  for (int a = 0; a < omega.size(); ++a) {
    for (int b = a + 1; b < omega.size(); ++b) {
      EdgeFunction f = EdgeRestriction(u, omega[a], omega[b]);
      if (auto t = f.FirstNonzero()) {
        out.zero = false;
        out.witness = EdgePoint(n, omega[a], omega[b], *t);
        return out;
      }
    }
  }
  std::mt19937_64 rng(options.seed);
  for (int s = 0; s < options.samples; ++s) {
    Belief b = RandomFacePoint(n, omega, rng);
    if (u.Eval(b) != 0) {
      out.zero = false;
      out.witness = b;
      return out;
    }
  }
  return out;
}

}  // namespace

ZeroCheck IsZeroOnSubsimplex(const PiecewiseAffineUtility& u,
                             const StateSet& omega,
                             const ZeroCheckOptions& options) {
  RequireVanishing(u);
  const int n = u.num_states();
  ZeroCheck out;
  if (omega.size() < 2) return out;
  if (omega.size() == 2) {
    EdgeFunction f = EdgeRestriction(u, omega[0], omega[1]);
    if (auto t = f.FirstNonzero()) {
      out.zero = false;
      out.witness = EdgePoint(n, omega[0], omega[1], *t);
    }
    return out;
  }
  std::vector<Cell> cells;
  try {
    cells = FirstMatchCells(u, kDefaultCellCap, omega);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEnumerationTooLarge) throw;
    return SampledZeroCheck(u, omega, options);
  }
  for (const Cell& cell : cells) {
    auto geo = AnalyzeRegion(n, RegionFromCell(omega, cell));
    if (!geo) return SampledZeroCheck(u, omega, options);
    if (!geo->nonempty) continue;
    if (auto w = NonzeroPoint(cell.form, *geo)) {
      out.zero = false;
      out.witness = *w;
      return out;
    }
  }
  return out;
}

PoolingVerdict ClassifyPooling(const GamePayoffs& g, const StateSet& omega) {
  PoolingVerdict v{omega};
  for (int i = 0; i < g.num_senders(); ++i) {
    ZeroCheck z = IsZeroOnSubsimplex(g.utilities[i], omega);
    v.sampled = v.sampled || z.sampled;
    if (!z.zero) {
      v.never_pooled = true;
      v.witness = z.witness;
      // Report the sender holding the advantage at the witness; with
      // zero-sum payoffs some sender is positive wherever one is nonzero.
      v.witness_sender = i;
      for (int j = 0; j < g.num_senders(); ++j) {
        if (g.utilities[j].Eval(*z.witness) > 0) {
          v.witness_sender = j;
          break;
        }
      }
      return v;
    }
  }
  return v;
}

RevelationReport ClassifyFullRevelation(const GamePayoffs& g) {
  RevelationReport report;
  const int n = g.num_states();
  for (int l = 0; l < n; ++l) {
    for (int k = l + 1; k < n; ++k) {
      PoolingVerdict v = ClassifyPooling(g, StateSet::Pair(l, k));
      if (!v.never_pooled && report.full_revelation) {
        report.full_revelation = false;
        report.pooled_pair = v.omega;
      }
      report.edges.push_back(std::move(v));
    }
  }
  return report;
}

std::vector<StateSet> MinimalSubsets(const GamePayoffs& g) {
  RequireNormalized(g);
  const int n = g.num_states();
  std::vector<StateSet> subsets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    std::vector<int> m;
    for (int l = 0; l < n; ++l) {
      if (mask & (1u << l)) m.push_back(l);
    }
    subsets.emplace_back(std::move(m));
  }
  std::sort(subsets.begin(), subsets.end());
  std::vector<StateSet> minimal;
  for (const StateSet& s : subsets) {
    bool covers_known = std::any_of(
        minimal.begin(), minimal.end(),
        [&](const StateSet& m) { return m.IsSubsetOf(s); });
    if (covers_known) continue;
    if (ClassifyPooling(g, s).never_pooled) minimal.push_back(s);
  }
  return minimal;
}

PooledSets DetectPooledSets(const StrategyProfile& profile) {
  Experiment joint = Product(profile);
  std::set<StateSet> supports;
  for (const Atom& a : joint.atoms()) {
    StateSet s = a.belief.Support();
    if (s.size() >= 2) supports.insert(s);
  }
  PooledSets out;
  for (const StateSet& s : supports) {
    bool dominated = std::any_of(
        supports.begin(), supports.end(),
        [&](const StateSet& t) { return !(t == s) && s.IsSubsetOf(t); });
    if (!dominated) out.maximal.push_back(s);
  }
  std::set<StateSet> all;
  for (const StateSet& s : out.maximal) {
    const int k = s.size();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      if (__builtin_popcount(mask) < 2) continue;
      std::vector<int> m;
      for (int j = 0; j < k; ++j) {
        if (mask & (1u << j)) m.push_back(s[j]);
      }
      all.insert(StateSet(std::move(m)));
    }
  }
  out.all.assign(all.begin(), all.end());
  return out;
}

Condition1Report Condition1(const GamePayoffs& g) {
  RequireNormalized(g);
  Condition1Report report;
  const int n = g.num_states();
  for (int l = 0; l < n; ++l) {
    for (int k = l + 1; k < n; ++k) {
      Condition1Edge e{l, k};
      for (int i = 0; i < g.num_senders(); ++i) {
        EdgeFunction f = EdgeRestriction(g.utilities[i], l, k);
        e.slope_at_l.push_back(f.segments().front().slope);
        e.slope_at_k.push_back(f.segments().back().slope);
        if (!e.satisfied &&
            (e.slope_at_l.back() != 0 || e.slope_at_k.back() != 0)) {
          e.satisfied = true;
          e.sender = i;
        }
      }
      report.satisfied = report.satisfied && e.satisfied;
      report.edges.push_back(std::move(e));
    }
  }
  return report;
}

SurplusResult MaxTotalSurplus(const GamePayoffs& g) {
  const int n = g.num_states();
  const StateSet all = StateSet::All(n);
  SurplusResult out;
  bool found = false;
  auto consider = [&](const Rational& v, const Belief& b) {
    if (!found || v > out.value) {
      out.value = v;
      out.argmax = b;
      found = true;
    }
  };
  std::vector<Cell> cells;
  try {
    cells = SumCells(g.utilities);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEnumerationTooLarge) throw;
  }
  for (const Cell& cell : cells) {
    auto geo = AnalyzeRegion(n, RegionFromCell(all, cell));
    if (!geo) {
      out.exact = false;
      continue;
    }
    if (!geo->nonempty) continue;
    // The supremum of an affine form over a region is attained on the
    // closure, at a vertex.
    for (const Belief& v : geo->closure_vertices) consider(cell.form.Eval(v), v);
  }
  if (cells.empty() || !out.exact) {
    // Certified lower bound from vertices, edges and samples.
    out.exact = false;
    auto total = [&](const Belief& b) {
      Rational s = 0;
      for (const PiecewiseAffineUtility& u : g.utilities) s += u.Eval(b);
      return s;
    };
    for (int l = 0; l < n; ++l) {
      Belief v = Belief::Vertex(n, l);
      consider(total(v), v);
      for (int k = l + 1; k < n; ++k) {
        EdgeFunction f = EdgeFunction::Zero();
        for (const auto& u : g.utilities) f = f + EdgeRestriction(u, l, k);
        for (const Rational& t : f.ProbePoints()) {
          consider(f.Eval(t), EdgePoint(n, l, k, t));
        }
      }
    }
    std::mt19937_64 rng(1);
    for (int s = 0; s < 10000; ++s) {
      Belief b = Belief::Unchecked(RandomInteriorPoint(n, rng));
      consider(total(b), b);
    }
  }
  return out;
}

SurplusSufficiency StrictSurplusSufficiency(const GamePayoffs& g) {
  RequireNormalized(g);
  const int n = g.num_states();
  const StateSet all = StateSet::All(n);
  SurplusSufficiency out;
  auto is_vertex = [](const Belief& b) { return b.IsDegenerate(); };
  for (const Cell& cell : SumCells(g.utilities)) {
    Region region = RegionFromCell(all, cell);
    auto geo = AnalyzeRegion(n, region);
    if (!geo) {
      out.exact = false;
      continue;
    }
    if (!geo->nonempty) continue;
    const AffineForm& f = cell.form;
    const Belief& c = geo->interior;
    Rational fc = f.Eval(c);
    Rational best = fc;
    const Belief* best_vertex = nullptr;
    for (const Belief& v : geo->closure_vertices) {
      Rational fv = f.Eval(v);
      if (best_vertex == nullptr || fv > f.Eval(*best_vertex)) best_vertex = &v;
      best = std::max(best, fv);
    }
    if (best < 0) continue;
    if (geo->closure_vertices.size() == 1) {
      // A single point region.
      if (is_vertex(c)) continue;
      out.witness = c;
      return out;
    }
    if (fc >= 0) {
      out.witness = c;
      return out;
    }
    Rational fv = f.Eval(*best_vertex);
    if (fv > 0) {
      // Walk from the vertex toward the centroid to a point with value fv/2.
      Rational s = fv / (2 * (fv - fc));
      out.witness = Mix(*best_vertex, c, s);
      return out;
    }
    // Maximum exactly zero: look for zeros of f inside the region.
    Region zeros = region.With({HalfSpace{f.coeffs, f.constant, false}});
    auto zgeo = AnalyzeRegion(n, zeros);
    if (!zgeo) {
      out.exact = false;
      continue;
    }
    if (!zgeo->nonempty) continue;
    if (zgeo->closure_vertices.size() == 1 && is_vertex(zgeo->interior)) {
      continue;
    }
    out.witness = zgeo->interior;
    return out;
  }
  if (!out.exact) {
    std::mt19937_64 rng(1);
    for (int s = 0; s < 10000; ++s) {
      Belief b = Belief::Unchecked(RandomInteriorPoint(n, rng));
      Rational total = 0;
      for (const auto& u : g.utilities) total += u.Eval(b);
      if (total >= 0) {
        out.witness = b;
        return out;
      }
    }
  }
  out.holds = true;
  return out;
}

}  // namespace persuasion
