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

#ifndef PERSUASION_UTILITY_H_
#define PERSUASION_UTILITY_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "persuasion/belief.h"
#include "persuasion/experiment.h"
#include "persuasion/rational.h"

namespace persuasion {

// constant + sum_l coeffs[l] * b_l
struct AffineForm {
  Rational constant = 0;
  std::vector<Rational> coeffs;

  static AffineForm Zero(int num_states);
  Rational Eval(const std::vector<Rational>& b) const;
  Rational Eval(const Belief& b) const { return Eval(b.probs()); }
  bool IsZero() const;

  // Restriction to the edge point (1 - t) delta_l + t delta_k, returned as
  // {intercept, slope} in t.
  std::pair<Rational, Rational> OnEdge(int l, int k) const;

  AffineForm operator-() const;
  friend AffineForm operator+(const AffineForm& a, const AffineForm& b);
  friend AffineForm operator-(const AffineForm& a, const AffineForm& b) {
    return a + (-b);
  }
  friend AffineForm operator*(const Rational& s, const AffineForm& a);
  friend bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.constant == b.constant && a.coeffs == b.coeffs;
  }
};

enum class Relation { kLess, kLessEqual, kGreater, kGreaterEqual };
std::string_view RelationSymbol(Relation r);
Relation ParseRelation(std::string_view symbol);

// lhs(b) <op> 0
struct Inequality {
  AffineForm lhs;
  Relation op;

  bool Holds(const std::vector<Rational>& b) const;
  bool Holds(const Belief& b) const { return Holds(b.probs()); }
  Inequality Negated() const;
  friend bool operator==(const Inequality& a, const Inequality& b) {
    return a.op == b.op && a.lhs == b.lhs;
  }
};

struct Piece {
  std::vector<Inequality> guard;  // conjunction; empty means always
  AffineForm form;

  bool Matches(const std::vector<Rational>& b) const;
  friend bool operator==(const Piece& a, const Piece& b) {
    return a.guard == b.guard && a.form == b.form;
  }
};

// Ordered guarded affine pieces; the first piece whose guard holds decides.
class PiecewiseAffineUtility {
 public:
  PiecewiseAffineUtility() = default;
  PiecewiseAffineUtility(int num_states, std::vector<Piece> pieces);
  static PiecewiseAffineUtility Zero(int num_states);
  static PiecewiseAffineUtility Affine(AffineForm form);

  int num_states() const { return num_states_; }
  const std::vector<Piece>& pieces() const { return pieces_; }

  std::optional<int> MatchingPiece(const std::vector<Rational>& b) const;
  // Throws kNoPieceMatches when no guard holds.
  Rational Eval(const std::vector<Rational>& b) const;
  Rational Eval(const Belief& b) const { return Eval(b.probs()); }

  PiecewiseAffineUtility Negated() const;
  PiecewiseAffineUtility PlusAffine(const AffineForm& extra) const;

  friend bool operator==(const PiecewiseAffineUtility& a,
                         const PiecewiseAffineUtility& b) {
    return a.num_states_ == b.num_states_ && a.pieces_ == b.pieces_;
  }

 private:
  int num_states_ = 0;
  std::vector<Piece> pieces_;
};

inline Rational EvalUtility(const PiecewiseAffineUtility& u, const Belief& b) {
  return u.Eval(b);
}

// A conjunction with one affine form. The cells of a utility are pairwise
// disjoint and reproduce first-match evaluation wherever a piece matches.
struct Cell {
  std::vector<Inequality> constraints;
  AffineForm form;
};
inline constexpr std::size_t kDefaultCellCap = 200000;
// Throws kEnumerationTooLarge past the cap. Conjunctions that are empty on
// `face` (the whole simplex by default) are dropped as they appear, which
// keeps the split of the complement from growing exponentially.
std::vector<Cell> FirstMatchCells(const PiecewiseAffineUtility& u,
                                  std::size_t cap = kDefaultCellCap,
                                  const std::optional<StateSet>& face = {});
// Common refinement of the cells of several utilities, with summed forms.
std::vector<Cell> SumCells(const std::vector<PiecewiseAffineUtility>& list,
                           std::size_t cap = kDefaultCellCap,
                           const std::optional<StateSet>& face = {});
// Pointwise sum as a utility whose pieces are the refined cells.
PiecewiseAffineUtility SumOfUtilities(
    const std::vector<PiecewiseAffineUtility>& list,
    std::size_t cap = kDefaultCellCap);

// Random rational point of the simplex with every coordinate positive.
std::vector<Rational> RandomInteriorPoint(int num_states, std::mt19937_64& rng);

// Coverage probe at every vertex, every edge breakpoint and edge midpoint,
// and `samples` random interior points. Returns an uncovered belief if any.
std::optional<Belief> FindCoverageGap(const PiecewiseAffineUtility& u,
                                      int samples, std::uint64_t seed = 1);

struct GamePayoffs {
  std::vector<PiecewiseAffineUtility> utilities;
  bool normalized = false;

  int num_senders() const { return static_cast<int>(utilities.size()); }
  int num_states() const {
    return utilities.empty() ? 0 : utilities.front().num_states();
  }
  friend bool operator==(const GamePayoffs& a, const GamePayoffs& b) {
    return a.normalized == b.normalized && a.utilities == b.utilities;
  }
};

// Adds -sum_l b_l u_i(delta_l) to every piece of every utility.
GamePayoffs NormalizePayoffs(const GamePayoffs& g);
// Exact test of u_i(delta_l) = 0 for all senders and states.
bool VanishesAtVertices(const GamePayoffs& g);

// Exact one-dimensional restriction to the edge (1 - t) delta_l + t delta_k.
// Breakpoints 0 = t_0 < ... < t_J = 1 carry their own values; each open
// interval (t_j, t_{j+1}) carries an affine segment. Adjacent intervals that
// agree are merged, so the representation is canonical.
class EdgeFunction {
 public:
  struct Segment {
    Rational intercept;
    Rational slope;
    Rational At(const Rational& t) const { return intercept + slope * t; }
    friend bool operator==(const Segment& a, const Segment& b) {
      return a.intercept == b.intercept && a.slope == b.slope;
    }
  };

  EdgeFunction() = default;
  EdgeFunction(std::vector<Rational> breakpoints,
               std::vector<Rational> point_values,
               std::vector<Segment> segments);
  static EdgeFunction Zero();

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& point_values() const { return point_values_; }
  const std::vector<Segment>& segments() const { return segments_; }

  // Precondition: 0 <= t <= 1.
  Rational Eval(const Rational& t) const;
  bool IsZero() const;
  // Breakpoints and interval midpoints, in increasing order.
  std::vector<Rational> ProbePoints() const;
  // First probe point with a nonzero value.
  std::optional<Rational> FirstNonzero() const;

  friend EdgeFunction operator+(const EdgeFunction& a, const EdgeFunction& b);
  friend bool operator==(const EdgeFunction& a, const EdgeFunction& b) {
    return a.breakpoints_ == b.breakpoints_ &&
           a.point_values_ == b.point_values_ && a.segments_ == b.segments_;
  }

 private:
  void Canonicalize();

  std::vector<Rational> breakpoints_;
  std::vector<Rational> point_values_;
  std::vector<Segment> segments_;
};

// Requires l != k.
EdgeFunction EdgeRestriction(const PiecewiseAffineUtility& u, int l, int k);

enum class EdgeEnd { kAtL, kAtK };
// Slope of the first (kAtL) or last (kAtK) segment of the edge restriction.
Rational EdgeDerivativeAtVertex(const PiecewiseAffineUtility& u, int l, int k,
                                EdgeEnd end);

struct ZeroSumReport {
  bool exact_on_edges = true;    // the edge refinement check passed
  std::optional<Belief> witness;  // first belief with nonzero total
  bool ok() const { return !witness.has_value(); }
};
ZeroSumReport CheckZeroSum(const GamePayoffs& g, int samples,
                           std::uint64_t seed = 1);

// Expected utility of sender i over the posteriors of `posterior_law`.
Rational ExpectedUtility(const PiecewiseAffineUtility& u,
                         const Experiment& posterior_law);
Rational ExpectedUtility(const GamePayoffs& g, const StrategyProfile& profile,
                         int sender);

// Expected utility of u given the interim belief x, against `other`.
Rational ConditionalPayoffAgainst(const PiecewiseAffineUtility& u,
                                  const Experiment& other, const Belief& x);
// Against the product of every sender except `sender`.
Rational ConditionalPayoff(const GamePayoffs& g, const StrategyProfile& profile,
                           int sender, const Belief& x);

struct SurplusResult {
  Rational value;
  bool exact = true;
  Belief argmax;  // belief attaining the value or approaching it
};
// Supremum of the summed utilities over the simplex.
SurplusResult MaxTotalSurplus(const GamePayoffs& g);

}  // namespace persuasion

#endif  // PERSUASION_UTILITY_H_
