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

#include "persuasion/equilibrium.h"

#include <algorithm>
#include <numeric>

#include "persuasion/analysis.h"
#include "persuasion/errors.h"
#include "persuasion/geometry.h"

namespace persuasion {

StrategyProfile ConstructFullyRevealing(const Belief& prior, int num_senders) {
  if (num_senders < 1) Fail(ErrorCode::kMalformedInput, "no senders");
  Experiment fr = CanonicalExperiment(prior, CanonicalKind::kFullyRevealing);
  return StrategyProfile(std::vector<Experiment>(num_senders, fr));
}

StrategyProfile ConstructPoolingEquilibrium(const GamePayoffs& g,
                                            const Belief& prior,
                                            const StateSet& omega) {
  if (!prior.HasFullSupport()) {
    Fail(ErrorCode::kPreconditionFailed, "prior lacks full support");
  }
  const int n = prior.num_states();
  if (omega.members().back() >= n) {
    Fail(ErrorCode::kMalformedInput, "state set exceeds the state count");
  }
  PoolingVerdict v = ClassifyPooling(g, omega);
  if (v.never_pooled) {
    Fail(ErrorCode::kNotPoolable,
         "sender " + std::to_string(v.witness_sender + 1) +
             " has an advantage on " + omega.ToString() + " at " +
             v.witness->ToString());
  }
  Rational pooled_mass = 0;
  for (int l : omega) pooled_mass += prior[l];
  std::vector<Rational> pooled(n, Rational(0));
  for (int l : omega) pooled[l] = prior[l] / pooled_mass;
  std::vector<Atom> atoms;
  for (int l = 0; l < n; ++l) {
    if (!omega.Contains(l)) atoms.push_back({Belief::Vertex(n, l), prior[l]});
  }
  atoms.push_back({Belief::Unchecked(std::move(pooled)), pooled_mass});
  Experiment pool(prior, std::move(atoms));
  return StrategyProfile(std::vector<Experiment>(g.num_senders(), pool));
}

Deviation DeviationToward(const Belief& prior, const Belief& x) {
  if (x.IsDegenerate()) {
    Fail(ErrorCode::kPreconditionFailed, "deviation target is a vertex");
  }
  const int n = prior.num_states();
  std::optional<Rational> bound;
  for (int l = 0; l < n; ++l) {
    if (x[l] == 0) continue;
    Rational r = prior[l] / x[l];
    if (!bound || r < *bound) bound = r;
  }
  Rational epsilon = *bound / 2;
  std::vector<Atom> atoms;
  for (int l = 0; l < n; ++l) {
    atoms.push_back({Belief::Vertex(n, l), prior[l] - epsilon * x[l]});
  }
  atoms.push_back({x, epsilon});
  return {Experiment(prior, std::move(atoms)), x, epsilon};
}

StrategyProfile ApplyCertificate(const StrategyProfile& profile,
                                 const ExploitCertificate& cert) {
  const Experiment& own = profile[cert.sender];
  Experiment stacked =
      Product(profile.prior(), {own, cert.deviation.experiment});
  return profile.With(cert.sender, std::move(stacked));
}

namespace {

void RequireNormalized(const GamePayoffs& g) {
  if (!VanishesAtVertices(g)) {
    Fail(ErrorCode::kNotNormalized, "payoffs are not normalized");
  }
}

// Shared state of one exploit search.
struct Search {
  const GamePayoffs& g;
  const Experiment& joint;  // product of the whole profile
  StateSet theta;
  std::vector<std::vector<Rational>> weights;  // z_l / prior_l per atom of Z
  int evaluations = 0;
};

std::optional<ExploitCertificate> TryInterim(Search& s, const Belief& x,
                                             const std::string& method) {
  if (x.IsDegenerate()) return std::nullopt;
  ++s.evaluations;
  for (int j = 0; j < s.g.num_senders(); ++j) {
    Rational w = ConditionalPayoffAgainst(s.g.utilities[j], s.joint, x);
    if (w > 0) {
      ExploitCertificate cert;
      cert.sender = j;
      cert.deviation = DeviationToward(s.joint.prior(), x);
      cert.conditional_value = w;
      cert.payoff = cert.deviation.epsilon * w;
      cert.omega = s.theta;
      cert.method = method;
      return cert;
    }
  }
  return std::nullopt;
}

// Interim belief whose posterior with the atom of weights w is `target`.
Belief InterimFor(const Belief& target, const std::vector<Rational>& w,
                  const StateSet& theta) {
  std::vector<Rational> x(target.num_states(), Rational(0));
  for (int l : theta) x[l] = target[l] / w[l];
  return Belief::Normalized(std::move(x));
}

// ---------------------------------------------------------------------------
// Two-state sets: the three threshold cases on the edge.

// Largest lo such that the segment is positive on (lo, q), assuming it is
// positive just below q.
Rational PositiveTail(const EdgeFunction::Segment& seg, const Rational& p) {
  if (seg.slope > 0) return std::max(p, Rational(-seg.intercept / seg.slope));
  return p;
}

bool PositiveBelow(const EdgeFunction::Segment& seg, const Rational& q) {
  Rational v = seg.At(q);
  return v > 0 || (v == 0 && seg.slope < 0);
}

bool PositiveOnWhole(const EdgeFunction::Segment& seg, const Rational& p,
                     const Rational& q) {
  Rational a = seg.At(p);
  Rational b = seg.At(q);
  return a >= 0 && b >= 0 && (a > 0 || b > 0);
}

// Supremum of the nonzero set of f, and whether it is attained as a point.
struct EdgeSupremum {
  bool any = false;
  Rational q;
  bool attained = false;
};

EdgeSupremum SupremumOfNonzero(const EdgeFunction& f) {
  const auto& bp = f.breakpoints();
  const auto& pv = f.point_values();
  const auto& seg = f.segments();
  for (int j = static_cast<int>(bp.size()) - 1; j >= 0; --j) {
    if (j < static_cast<int>(seg.size())) {
      const auto& s = seg[j];
      if (s.intercept != 0 || s.slope != 0) return {true, bp[j + 1], false};
    }
    if (pv[j] != 0) return {true, bp[j], true};
  }
  return {};
}

std::optional<ExploitCertificate> EdgeExploit(Search& s) {
  const int n = s.g.num_states();
  const int l = s.theta[0];
  const int k = s.theta[1];
  std::vector<EdgeFunction> f;
  std::vector<EdgeSupremum> sup;
  for (const auto& u : s.g.utilities) {
    f.push_back(EdgeRestriction(u, l, k));
    sup.push_back(SupremumOfNonzero(f.back()));
  }
  std::optional<Rational> top;
  for (const auto& q : sup) {
    if (q.any && (!top || q.q > *top)) top = q.q;
  }
  if (!top) return std::nullopt;

  int sender = -1;
  Rational r;
  if (*top == 1) {
    // Nonzero values accumulate at the far vertex.
    for (int i = 0; i < s.g.num_senders() && sender < 0; ++i) {
      const auto& seg = f[i].segments().back();
      if (!PositiveBelow(seg, Rational(1))) continue;
      sender = i;
      const auto& bp = f[i].breakpoints();
      const auto& pv = f[i].point_values();
      const auto& segs = f[i].segments();
      int last = static_cast<int>(segs.size()) - 1;
      // Extend to the smallest breakpoint that keeps u positive up to 1.
      std::optional<int> start;
      int m = last;
      while (m >= 1 && PositiveOnWhole(segs[m], bp[m], bp[m + 1]) &&
             pv[m] > 0) {
        start = m;
        --m;
      }
      if (start) {
        r = bp[*start];
      } else {
        Rational lo = PositiveTail(seg, bp[last]);
        r = (lo + 1) / 2;
      }
    }
  } else {
    for (int i = 0; i < s.g.num_senders() && sender < 0; ++i) {
      if (f[i].Eval(*top) > 0) {
        sender = i;
        r = *top;
      }
    }
    if (sender < 0) {
      // Every value at the supremum is zero; positive values approach it
      // from below for some sender.
      for (int i = 0; i < s.g.num_senders() && sender < 0; ++i) {
        const auto& bp = f[i].breakpoints();
        auto it = std::lower_bound(bp.begin(), bp.end(), *top);
        int j = static_cast<int>(it - bp.begin());
        if (j == 0 || *it != *top) continue;
        const auto& seg = f[i].segments()[j - 1];
        if (!PositiveBelow(seg, *top)) continue;
        sender = i;
        r = (PositiveTail(seg, bp[j - 1]) + *top) / 2;
      }
    }
  }
  if (sender < 0) return std::nullopt;

  // Posterior odds of k against l equal the interim odds times the atom's
  // likelihood ratio; the smallest ratio lands exactly on r.
  const Belief& prior = s.joint.prior();
  std::optional<Rational> min_ratio;
  for (const Atom& z : s.joint.atoms()) {
    if (z.belief[l] == 0 || z.belief[k] == 0) continue;
    Rational rho = (z.belief[k] / prior[k]) / (z.belief[l] / prior[l]);
    if (!min_ratio || rho < *min_ratio) min_ratio = rho;
  }
  if (!min_ratio) return std::nullopt;
  Rational odds = r / (1 - r) / *min_ratio;
  Belief x = EdgePoint(n, l, k, odds / (1 + odds));
  auto cert = TryInterim(s, x, "edge");
  if (cert && cert->sender != sender) {
    // Some lower-indexed sender also profits; keep the deterministic choice.
    Rational w = ConditionalPayoffAgainst(s.g.utilities[sender], s.joint, x);
    if (w > 0) {
      cert->sender = sender;
      cert->conditional_value = w;
      cert->payoff = cert->deviation.epsilon * w;
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Larger sets: ratio targeting over the advantage set.

struct AdvantageRegion {
  int sender;
  Region region;  // open advantage cell on Delta(theta)
  RegionGeometry geo;
};

std::vector<AdvantageRegion> AdvantageRegions(const GamePayoffs& g,
                                              const StateSet& theta) {
  const int n = g.num_states();
  std::vector<AdvantageRegion> out;
  for (int j = 0; j < g.num_senders(); ++j) {
    for (const Cell& cell : FirstMatchCells(g.utilities[j], kDefaultCellCap, theta)) {
      Region r = RegionFromCell(theta, cell).With({PositiveConstraint(cell.form)});
      auto geo = AnalyzeRegion(n, r);
      if (!geo) {
        Fail(ErrorCode::kSearchBudgetExceeded, "advantage cell too complex");
      }
      if (geo->nonempty) out.push_back({j, std::move(r), std::move(*geo)});
    }
  }
  return out;
}

Region Closure(Region r) {
  for (HalfSpace& h : r.constraints) h.strict = false;
  return r;
}

// Ratio of the level-k state against the mass after it, in `order`.
std::optional<Rational> LevelRatio(const Belief& b, const std::vector<int>& order,
                                   int k) {
  Rational tail = 0;
  for (std::size_t m = k + 1; m < order.size(); ++m) tail += b[order[m]];
  if (tail == 0) return std::nullopt;  // infinite
  return b[order[k]] / tail;
}

struct LexMaximum {
  Belief point;
  std::vector<Rational> levels;  // indexed by position in the order
};

// Lexicographic maximum of the ratio vector, last level first, over the
// union of the closed regions (all on the face spanned by `order`).
std::optional<LexMaximum> LexMax(int n, std::vector<Region> closed,
                                 const std::vector<int>& order) {
  const int k_count = static_cast<int>(order.size());
  LexMaximum out;
  out.levels.assign(k_count, Rational(0));
  std::vector<RegionGeometry> geos;
  for (const Region& r : closed) {
    auto geo = AnalyzeRegion(n, r);
    if (!geo) return std::nullopt;
    geos.push_back(std::move(*geo));
  }
  for (int k = k_count - 2; k >= 0; --k) {
    std::optional<Rational> best;
    for (const RegionGeometry& geo : geos) {
      for (const Belief& v : geo.closure_vertices) {
        auto ratio = LevelRatio(v, order, k);
        if (!ratio) return std::nullopt;  // the closure reaches a lower face
        if (!best || *ratio > *best) best = *ratio;
      }
    }
    if (!best || *best == 0) return std::nullopt;
    out.levels[k] = *best;
    AffineForm eq = AffineForm::Zero(n);
    eq.coeffs[order[k]] = 1;
    for (int m = k + 1; m < k_count; ++m) eq.coeffs[order[m]] = -*best;
    std::vector<Region> next_regions;
    std::vector<RegionGeometry> next_geos;
    for (std::size_t i = 0; i < closed.size(); ++i) {
      bool attains = false;
      for (const Belief& v : geos[i].closure_vertices) {
        if (LevelRatio(v, order, k) == best) attains = true;
      }
      if (!attains) continue;
      Region r = closed[i].With(EqualityConstraint(eq));
      auto geo = AnalyzeRegion(n, r);
      if (!geo) return std::nullopt;
      if (geo->closure_vertices.empty()) continue;
      next_regions.push_back(std::move(r));
      next_geos.push_back(std::move(*geo));
    }
    closed = std::move(next_regions);
    geos = std::move(next_geos);
    if (closed.empty()) return std::nullopt;
  }
  if (geos.empty() || geos.front().closure_vertices.empty()) return std::nullopt;
  out.point = geos.front().closure_vertices.front();
  return out;
}

// Solves the levels top down: each interim coordinate is set so that the
// smallest level ratio among the surviving atoms equals the target; the
// survivors are the atoms attaining that minimum. Returns the index of one
// atom of the final argmin set.
int ArgminAtom(const Search& s, const std::vector<int>& order,
               const std::vector<Rational>& levels) {
  const int k_count = static_cast<int>(order.size());
  std::vector<Rational> x(s.g.num_states(), Rational(0));
  x[order[k_count - 1]] = 1;
  std::vector<int> alive(s.weights.size());
  std::iota(alive.begin(), alive.end(), 0);
  for (int k = k_count - 2; k >= 0; --k) {
    std::vector<Rational> value(s.weights.size());
    std::optional<Rational> low;
    for (int z : alive) {
      const auto& w = s.weights[z];
      Rational tail = 0;
      for (int m = k + 1; m < k_count; ++m) tail += x[order[m]] * w[order[m]];
      value[z] = w[order[k]] / tail;
      if (!low || value[z] < *low) low = value[z];
    }
    x[order[k]] = levels[k] / *low;
    std::vector<int> keep;
    for (int z : alive) {
      if (value[z] == *low) keep.push_back(z);
    }
    alive = std::move(keep);
  }
  return alive.front();
}

std::optional<ExploitCertificate> PerturbFrom(
    Search& s, const Belief& target, int anchor,
    const std::vector<AdvantageRegion>& regions, int steps,
    const std::string& method) {
  if (auto cert = TryInterim(s, InterimFor(target, s.weights[anchor], s.theta),
                             method)) {
    return cert;
  }
  for (const AdvantageRegion& a : regions) {
    if (!Closure(a.region).Contains(target)) continue;
    Rational t = Frac(1, 2);
    for (int step = 0; step < steps; ++step, t /= 2) {
      Belief moved = Mix(target, a.geo.interior, t);
      Belief x = InterimFor(moved, s.weights[anchor], s.theta);
      if (auto cert = TryInterim(s, x, method + "+perturb")) return cert;
    }
  }
  return std::nullopt;
}

std::optional<ExploitCertificate> RatioExploit(
    Search& s, const std::vector<AdvantageRegion>& regions,
    const StateSet& face, int steps, const std::string& method) {
  const int n = s.g.num_states();
  std::vector<Region> closed;
  for (const AdvantageRegion& a : regions) {
    Region r = Closure(a.region);
    r.face = face;
    closed.push_back(std::move(r));
  }
  std::vector<int> order = face.members();
  do {
    auto lex = LexMax(n, closed, order);
    if (!lex) continue;
    int anchor = ArgminAtom(s, order, lex->levels);
    if (face.size() == s.theta.size()) {
      if (auto cert = PerturbFrom(s, lex->point, anchor, regions, steps, method)) {
        return cert;
      }
    } else {
      // The maximum sits on a lower face; only perturbed targets are
      // interior to theta.
      for (const AdvantageRegion& a : regions) {
        if (!Closure(a.region).Contains(lex->point)) continue;
        Rational t = Frac(1, 2);
        for (int step = 0; step < steps; ++step, t /= 2) {
          Belief moved = Mix(lex->point, a.geo.interior, t);
          for (std::size_t z = 0; z < s.weights.size(); ++z) {
            Belief x = InterimFor(moved, s.weights[z], s.theta);
            if (auto cert = TryInterim(s, x, method)) return cert;
          }
        }
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

// Smallest faces of theta met by the closure of the advantage set.
std::vector<StateSet> TouchedFaces(int n, const StateSet& theta,
                                   const std::vector<AdvantageRegion>& regions) {
  const int k = theta.size();
  for (int size = 1; size < k; ++size) {
    std::vector<StateSet> found;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      std::vector<int> m;
      for (int j = 0; j < k; ++j) {
        if (mask & (1u << j)) m.push_back(theta[j]);
      }
      StateSet face(std::move(m));
      for (const AdvantageRegion& a : regions) {
        Region r = Closure(a.region);
        r.face = face;
        auto geo = AnalyzeRegion(n, r);
        if (geo && !geo->closure_vertices.empty()) {
          found.push_back(face);
          break;
        }
      }
    }
    if (!found.empty()) {
      std::sort(found.begin(), found.end());
      return found;
    }
  }
  return {};
}

std::optional<ExploitCertificate> DirectSearch(
    Search& s, const std::vector<AdvantageRegion>& regions) {
  for (const AdvantageRegion& a : regions) {
    std::vector<Belief> targets{a.geo.interior};
    for (const Belief& v : a.geo.closure_vertices) {
      Rational t = Frac(1, 2);
      for (int step = 0; step < 8; ++step, t /= 2) {
        targets.push_back(Mix(v, a.geo.interior, t));
      }
    }
    for (const Belief& target : targets) {
      if (!a.region.Contains(target)) continue;
      for (std::size_t z = 0; z < s.weights.size(); ++z) {
        Belief x = InterimFor(target, s.weights[z], s.theta);
        if (auto cert = TryInterim(s, x, "search")) return cert;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

ExploitCertificate SynthesizeExploit(const GamePayoffs& g,
                                     const StrategyProfile& profile,
                                     const StateSet& omega,
                                     const ExploitOptions& options) {
  RequireNormalized(g);
  const int n = g.num_states();
  if (profile.prior().num_states() != n || omega.members().back() >= n) {
    Fail(ErrorCode::kMalformedInput, "dimension mismatch");
  }
  Experiment joint = Product(profile);
  bool pools = std::any_of(joint.atoms().begin(), joint.atoms().end(),
                           [&](const Atom& a) { return a.belief.Support().size() >= 2 && omega.IsSubsetOf(a.belief.Support()); });
  if (!pools || omega.size() < 2) {
    Fail(ErrorCode::kPreconditionFailed,
         "profile does not pool " + omega.ToString());
  }
  // Reduce to the first minimal subset.
  std::optional<StateSet> theta;
  {
    std::vector<StateSet> subsets;
    const int k = omega.size();
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
      if (__builtin_popcount(mask) < 2) continue;
      std::vector<int> m;
      for (int j = 0; j < k; ++j) {
        if (mask & (1u << j)) m.push_back(omega[j]);
      }
      subsets.emplace_back(std::move(m));
    }
    std::sort(subsets.begin(), subsets.end());
    for (const StateSet& sub : subsets) {
      if (ClassifyPooling(g, sub).never_pooled) {
        theta = sub;
        break;
      }
    }
  }
  if (!theta) {
    Fail(ErrorCode::kPreconditionFailed,
         "every sender is zero on " + omega.ToString());
  }
  Search s{g, joint, *theta, {}};
  const Belief& prior = profile.prior();
  for (const Atom& z : joint.atoms()) {
    bool full = true;
    for (int l : *theta) full = full && z.belief[l] > 0;
    if (!full) continue;
    std::vector<Rational> w(n, Rational(0));
    for (int l : *theta) w[l] = z.belief[l] / prior[l];
    s.weights.push_back(std::move(w));
  }

  std::optional<ExploitCertificate> cert;
  if (theta->size() == 2) cert = EdgeExploit(s);
  if (!cert) {
    std::vector<AdvantageRegion> regions = AdvantageRegions(g, *theta);
    if (theta->size() > 2) {
      cert = RatioExploit(s, regions, *theta, options.shrink_steps, "ratio");
      if (!cert) {
        for (const StateSet& face : TouchedFaces(n, *theta, regions)) {
          cert = RatioExploit(s, regions, face, options.shrink_steps, "face");
          if (cert) break;
        }
      }
    }
    if (!cert) cert = DirectSearch(s, regions);
  }
  if (!cert) {
    Fail(ErrorCode::kSearchBudgetExceeded,
         "no verified deviation on " + theta->ToString() + " after " +
             std::to_string(s.evaluations) + " candidates");
  }
  return *cert;
}

VerifyReport VerifyProfile(const GamePayoffs& g, const StrategyProfile& profile,
                           int grid_resolution) {
  RequireNormalized(g);
  VerifyReport report;
  const Belief& prior = profile.prior();
  const int n = prior.num_states();
  Experiment joint = Product(profile);
  for (const auto& u : g.utilities) {
    report.payoffs.push_back(ExpectedUtility(u, joint));
  }
  auto reject = [&](int sender, const Deviation& d, const Rational& gain,
                    const std::string& reason) {
    report.looks_equilibrium = false;
    report.sender = sender;
    report.deviation = d.experiment;
    report.exploited = d.exploited;
    report.gain = gain;
    report.reason = reason;
  };

  for (const StateSet& pooled : DetectPooledSets(profile).maximal) {
    if (!ClassifyPooling(g, pooled).never_pooled) continue;
    try {
      ExploitCertificate cert = SynthesizeExploit(g, profile, pooled);
      reject(cert.sender, cert.deviation, cert.payoff, "exploit");
      return report;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSearchBudgetExceeded) throw;
    }
  }

  std::vector<Belief> grid = SimplexGrid(n, grid_resolution);
  for (int i = 0; i < g.num_senders(); ++i) {
    Experiment others = Product(prior, profile.Others(i));
    for (const Belief& x : grid) {
      if (x.IsDegenerate()) continue;
      Rational w = ConditionalPayoffAgainst(g.utilities[i], others, x);
      if (w > 0) {
        Deviation d = DeviationToward(prior, x);
        reject(i, d, d.epsilon * w, "grid");
        return report;
      }
      w = ConditionalPayoffAgainst(g.utilities[i], joint, x);
      if (w > 0) {
        Deviation d = DeviationToward(prior, x);
        reject(i, d, d.epsilon * w, "grid_in_addition");
        return report;
      }
    }
  }

  for (int i = 0; i < g.num_senders(); ++i) {
    if (report.payoffs[i] < 0) {
      report.looks_equilibrium = false;
      report.sender = i;
      report.deviation =
          CanonicalExperiment(prior, CanonicalKind::kFullyRevealing);
      report.gain = -report.payoffs[i];
      report.reason = "payoff";
      return report;
    }
  }
  for (const Rational& u : report.payoffs) {
    if (u != 0) {
      // Positive payoffs without a negative one cannot occur in zero-sum
      // games; report the inconsistency rather than accept.
      Fail(ErrorCode::kPreconditionFailed, "payoffs are not zero-sum");
    }
  }
  return report;
}

}  // namespace persuasion
