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

#include "persuasion/utility.h"

#include <algorithm>

#include "persuasion/errors.h"
#include "persuasion/geometry.h"

namespace persuasion {

AffineForm AffineForm::Zero(int num_states) {
  return AffineForm{Rational(0), std::vector<Rational>(num_states, Rational(0))};
}

Rational AffineForm::Eval(const std::vector<Rational>& b) const {
  Rational v = constant;
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    if (coeffs[l] != 0 && b[l] != 0) v += coeffs[l] * b[l];
  }
  return v;
}

bool AffineForm::IsZero() const {
  if (constant != 0) return false;
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Rational& c) { return c == 0; });
}

std::pair<Rational, Rational> AffineForm::OnEdge(int l, int k) const {
  return {constant + coeffs[l], coeffs[k] - coeffs[l]};
}

AffineForm AffineForm::operator-() const {
  AffineForm out{-constant, coeffs};
  for (Rational& c : out.coeffs) c = -c;
  return out;
}

AffineForm operator+(const AffineForm& a, const AffineForm& b) {
  AffineForm out{a.constant + b.constant, a.coeffs};
  for (std::size_t l = 0; l < out.coeffs.size(); ++l) {
    out.coeffs[l] += b.coeffs[l];
  }
  return out;
}

AffineForm operator*(const Rational& s, const AffineForm& a) {
  AffineForm out{s * a.constant, a.coeffs};
  for (Rational& c : out.coeffs) c *= s;
  return out;
}

std::string_view RelationSymbol(Relation r) {
  switch (r) {
    case Relation::kLess: return "<";
    case Relation::kLessEqual: return "<=";
    case Relation::kGreater: return ">";
    case Relation::kGreaterEqual: return ">=";
  }
  return "?";
}

Relation ParseRelation(std::string_view symbol) {
  if (symbol == "<") return Relation::kLess;
  if (symbol == "<=" || symbol == "≤") return Relation::kLessEqual;
  if (symbol == ">") return Relation::kGreater;
  if (symbol == ">=" || symbol == "≥") return Relation::kGreaterEqual;
  Fail(ErrorCode::kMalformedInput,
       "unknown relation \"" + std::string(symbol) + "\"");
}

namespace {

bool Compare(const Rational& v, Relation op) {
  switch (op) {
    case Relation::kLess: return v < 0;
    case Relation::kLessEqual: return v <= 0;
    case Relation::kGreater: return v > 0;
    case Relation::kGreaterEqual: return v >= 0;
  }
  return false;
}

// Truth value of an inequality without belief dependence, if it has one.
std::optional<bool> ConstantTruth(const Inequality& q) {
  for (const Rational& c : q.lhs.coeffs) {
    if (c != 0) return std::nullopt;
  }
  return Compare(q.lhs.constant, q.op);
}

}  // namespace

bool Inequality::Holds(const std::vector<Rational>& b) const {
  return Compare(lhs.Eval(b), op);
}

Inequality Inequality::Negated() const {
  switch (op) {
    case Relation::kLess: return {lhs, Relation::kGreaterEqual};
    case Relation::kLessEqual: return {lhs, Relation::kGreater};
    case Relation::kGreater: return {lhs, Relation::kLessEqual};
    case Relation::kGreaterEqual: return {lhs, Relation::kLess};
  }
  return *this;
}

bool Piece::Matches(const std::vector<Rational>& b) const {
  for (const Inequality& q : guard) {
    if (!q.Holds(b)) return false;
  }
  return true;
}

PiecewiseAffineUtility::PiecewiseAffineUtility(int num_states,
                                               std::vector<Piece> pieces)
    : num_states_(num_states), pieces_(std::move(pieces)) {
  if (num_states_ < 1) Fail(ErrorCode::kMalformedInput, "no states");
  if (pieces_.empty()) Fail(ErrorCode::kMalformedInput, "utility has no pieces");
  auto check = [&](const AffineForm& f) {
    if (static_cast<int>(f.coeffs.size()) != num_states_) {
      Fail(ErrorCode::kMalformedInput,
           "affine form has " + std::to_string(f.coeffs.size()) +
               " coefficients, expected " + std::to_string(num_states_));
    }
  };
  for (const Piece& p : pieces_) {
    check(p.form);
    for (const Inequality& q : p.guard) check(q.lhs);
  }
}

PiecewiseAffineUtility PiecewiseAffineUtility::Zero(int num_states) {
  return PiecewiseAffineUtility(num_states,
                                {Piece{{}, AffineForm::Zero(num_states)}});
}

PiecewiseAffineUtility PiecewiseAffineUtility::Affine(AffineForm form) {
  int n = static_cast<int>(form.coeffs.size());
  return PiecewiseAffineUtility(n, {Piece{{}, std::move(form)}});
}

std::optional<int> PiecewiseAffineUtility::MatchingPiece(
    const std::vector<Rational>& b) const {
  for (std::size_t p = 0; p < pieces_.size(); ++p) {
    if (pieces_[p].Matches(b)) return static_cast<int>(p);
  }
  return std::nullopt;
}

Rational PiecewiseAffineUtility::Eval(const std::vector<Rational>& b) const {
  auto p = MatchingPiece(b);
  if (!p) {
    Fail(ErrorCode::kNoPieceMatches,
         "no piece covers " + Belief::Unchecked(b).ToString());
  }
  return pieces_[*p].form.Eval(b);
}

PiecewiseAffineUtility PiecewiseAffineUtility::Negated() const {
  PiecewiseAffineUtility out = *this;
  for (Piece& p : out.pieces_) p.form = -p.form;
  return out;
}

PiecewiseAffineUtility PiecewiseAffineUtility::PlusAffine(
    const AffineForm& extra) const {
  PiecewiseAffineUtility out = *this;
  for (Piece& p : out.pieces_) p.form = p.form + extra;
  return out;
}

namespace {

// False only when the conjunction is certainly empty on the face. Regions
// too large for the vertex budget are kept.
bool MaybeNonempty(int num_states, const StateSet& face,
                   const std::vector<Inequality>& conj) {
  auto geo = AnalyzeRegion(num_states, RegionFromCell(face, Cell{conj, {}}));
  return !geo || geo->nonempty;
}

}  // namespace

std::vector<Cell> FirstMatchCells(const PiecewiseAffineUtility& u,
                                  std::size_t cap,
                                  const std::optional<StateSet>& face) {
  using Conj = std::vector<Inequality>;
  const int n = u.num_states();
  const StateSet where = face ? *face : StateSet::All(n);
  // Appends q to c unless it is trivially true or already there; false
  // means c died.
  auto extend = [](Conj& c, const Inequality& q) {
    if (auto truth = ConstantTruth(q)) return *truth;
    if (std::find(c.begin(), c.end(), q) == c.end()) c.push_back(q);
    return true;
  };
  std::vector<Cell> cells;
  // Conjunctions describing "no earlier piece matched".
  std::vector<Conj> unmatched{Conj{}};
  for (const Piece& piece : u.pieces()) {
    for (const Conj& c : unmatched) {
      Conj cell = c;
      bool alive = true;
      for (const Inequality& q : piece.guard) alive = alive && extend(cell, q);
      if (alive && MaybeNonempty(n, where, cell)) {
        cells.push_back({std::move(cell), piece.form});
      }
      if (cells.size() > cap) {
        Fail(ErrorCode::kEnumerationTooLarge, "too many utility cells");
      }
    }
    // Disjoint split of the complement: the first failing guard inequality.
    std::vector<Conj> next;
    for (const Conj& c : unmatched) {
      Conj prefix = c;
      bool prefix_alive = true;
      for (const Inequality& q : piece.guard) {
        Conj alt = prefix;
        if (extend(alt, q.Negated()) && MaybeNonempty(n, where, alt)) {
          next.push_back(std::move(alt));
        }
        prefix_alive = prefix_alive && extend(prefix, q);
        if (!prefix_alive) break;
      }
      if (next.size() > cap) {
        Fail(ErrorCode::kEnumerationTooLarge, "too many utility cells");
      }
    }
    unmatched = std::move(next);
    if (unmatched.empty()) break;
  }
  return cells;
}

std::vector<Cell> SumCells(const std::vector<PiecewiseAffineUtility>& list,
                           std::size_t cap,
                           const std::optional<StateSet>& face) {
  if (list.empty()) Fail(ErrorCode::kMalformedInput, "empty sum");
  const int n = list.front().num_states();
  const StateSet where = face ? *face : StateSet::All(n);
  std::vector<Cell> acc{Cell{{}, AffineForm::Zero(n)}};
  for (const PiecewiseAffineUtility& u : list) {
    std::vector<Cell> cells = FirstMatchCells(u, cap, face);
    std::vector<Cell> next;
    for (const Cell& a : acc) {
      for (const Cell& b : cells) {
        Cell c{a.constraints, a.form + b.form};
        for (const Inequality& q : b.constraints) {
          if (std::find(c.constraints.begin(), c.constraints.end(), q) ==
              c.constraints.end()) {
            c.constraints.push_back(q);
          }
        }
        if (!MaybeNonempty(n, where, c.constraints)) continue;
        next.push_back(std::move(c));
        if (next.size() > cap) {
          Fail(ErrorCode::kEnumerationTooLarge, "sum refinement too large");
        }
      }
    }
    acc = std::move(next);
  }
  return acc;
}

PiecewiseAffineUtility SumOfUtilities(
    const std::vector<PiecewiseAffineUtility>& list, std::size_t cap) {
  std::vector<Piece> pieces;
  for (Cell& c : SumCells(list, cap)) {
    pieces.push_back({std::move(c.constraints), std::move(c.form)});
  }
  return PiecewiseAffineUtility(list.front().num_states(), std::move(pieces));
}

std::vector<Rational> RandomInteriorPoint(int num_states, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(1, 997);
  std::vector<Rational> w(num_states);
  Rational total = 0;
  for (Rational& v : w) {
    v = dist(rng);
    total += v;
  }
  for (Rational& v : w) v /= total;
  return w;
}

namespace {

// Roots in (0, 1) of every guard of u restricted to the edge l -> k.
std::vector<Rational> GuardRootsOnEdge(const PiecewiseAffineUtility& u, int l,
                                       int k) {
  std::vector<Rational> roots{Rational(0), Rational(1)};
  for (const Piece& p : u.pieces()) {
    for (const Inequality& q : p.guard) {
      auto [c0, c1] = q.lhs.OnEdge(l, k);
      if (c1 == 0) continue;
      Rational t = -c0 / c1;
      if (t > 0 && t < 1) roots.push_back(t);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

std::optional<Belief> FindCoverageGap(const PiecewiseAffineUtility& u,
                                      int samples, std::uint64_t seed) {
  const int n = u.num_states();
  auto covered = [&](const Belief& b) {
    return u.MatchingPiece(b.probs()).has_value();
  };
  for (int l = 0; l < n; ++l) {
    Belief v = Belief::Vertex(n, l);
    if (!covered(v)) return v;
  }
  for (int l = 0; l < n; ++l) {
    for (int k = l + 1; k < n; ++k) {
      std::vector<Rational> roots = GuardRootsOnEdge(u, l, k);
      for (std::size_t j = 0; j < roots.size(); ++j) {
        Belief at = EdgePoint(n, l, k, roots[j]);
        if (!covered(at)) return at;
        if (j + 1 < roots.size()) {
          Belief mid = EdgePoint(n, l, k, (roots[j] + roots[j + 1]) / 2);
          if (!covered(mid)) return mid;
        }
      }
    }
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    Belief b = Belief::Unchecked(RandomInteriorPoint(n, rng));
    if (!covered(b)) return b;
  }
  return std::nullopt;
}

GamePayoffs NormalizePayoffs(const GamePayoffs& g) {
  GamePayoffs out;
  out.normalized = true;
  for (const PiecewiseAffineUtility& u : g.utilities) {
    const int n = u.num_states();
    AffineForm shift = AffineForm::Zero(n);
    bool any = false;
    for (int l = 0; l < n; ++l) {
      Rational v = u.Eval(Belief::Vertex(n, l));
      if (v != 0) any = true;
      shift.coeffs[l] = -v;
    }
    out.utilities.push_back(any ? u.PlusAffine(shift) : u);
  }
  return out;
}

bool VanishesAtVertices(const GamePayoffs& g) {
  for (const PiecewiseAffineUtility& u : g.utilities) {
    for (int l = 0; l < u.num_states(); ++l) {
      if (u.Eval(Belief::Vertex(u.num_states(), l)) != 0) return false;
    }
  }
  return true;
}

EdgeFunction::EdgeFunction(std::vector<Rational> breakpoints,
                           std::vector<Rational> point_values,
                           std::vector<Segment> segments)
    : breakpoints_(std::move(breakpoints)),
      point_values_(std::move(point_values)),
      segments_(std::move(segments)) {
  if (breakpoints_.size() < 2 || breakpoints_.front() != 0 ||
      breakpoints_.back() != 1 ||
      point_values_.size() != breakpoints_.size() ||
      segments_.size() + 1 != breakpoints_.size()) {
    Fail(ErrorCode::kMalformedInput, "inconsistent edge function");
  }
  for (std::size_t j = 1; j < breakpoints_.size(); ++j) {
    if (!(breakpoints_[j - 1] < breakpoints_[j])) {
      Fail(ErrorCode::kMalformedInput, "edge breakpoints not increasing");
    }
  }
  Canonicalize();
}

EdgeFunction EdgeFunction::Zero() {
  return EdgeFunction({Rational(0), Rational(1)}, {Rational(0), Rational(0)},
                      {Segment{Rational(0), Rational(0)}});
}

void EdgeFunction::Canonicalize() {
  std::size_t j = 1;
  while (j + 1 < breakpoints_.size()) {
    if (segments_[j - 1] == segments_[j] &&
        point_values_[j] == segments_[j].At(breakpoints_[j])) {
      breakpoints_.erase(breakpoints_.begin() + j);
      point_values_.erase(point_values_.begin() + j);
      segments_.erase(segments_.begin() + j);
    } else {
      ++j;
    }
  }
}

Rational EdgeFunction::Eval(const Rational& t) const {
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  if (it == breakpoints_.end()) {
    Fail(ErrorCode::kPreconditionFailed, "edge parameter above 1");
  }
  std::size_t j = it - breakpoints_.begin();
  if (*it == t) return point_values_[j];
  if (j == 0) Fail(ErrorCode::kPreconditionFailed, "edge parameter below 0");
  return segments_[j - 1].At(t);
}

bool EdgeFunction::IsZero() const {
  for (const Rational& v : point_values_) {
    if (v != 0) return false;
  }
  for (const Segment& s : segments_) {
    if (s.intercept != 0 || s.slope != 0) return false;
  }
  return true;
}

std::vector<Rational> EdgeFunction::ProbePoints() const {
  std::vector<Rational> out;
  for (std::size_t j = 0; j < breakpoints_.size(); ++j) {
    out.push_back(breakpoints_[j]);
    if (j + 1 < breakpoints_.size()) {
      out.push_back((breakpoints_[j] + breakpoints_[j + 1]) / 2);
    }
  }
  return out;
}

std::optional<Rational> EdgeFunction::FirstNonzero() const {
  for (const Rational& t : ProbePoints()) {
    if (Eval(t) != 0) return t;
  }
  return std::nullopt;
}

EdgeFunction operator+(const EdgeFunction& a, const EdgeFunction& b) {
  std::vector<Rational> bp = a.breakpoints_;
  bp.insert(bp.end(), b.breakpoints_.begin(), b.breakpoints_.end());
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  std::vector<Rational> values;
  std::vector<EdgeFunction::Segment> segs;
  auto segment_at = [](const EdgeFunction& f, const Rational& mid) {
    auto it = std::upper_bound(f.breakpoints_.begin(), f.breakpoints_.end(), mid);
    return f.segments_[(it - f.breakpoints_.begin()) - 1];
  };
  for (std::size_t j = 0; j < bp.size(); ++j) {
    values.push_back(a.Eval(bp[j]) + b.Eval(bp[j]));
    if (j + 1 < bp.size()) {
      Rational mid = (bp[j] + bp[j + 1]) / 2;
      EdgeFunction::Segment sa = segment_at(a, mid);
      EdgeFunction::Segment sb = segment_at(b, mid);
      segs.push_back({sa.intercept + sb.intercept, sa.slope + sb.slope});
    }
  }
  return EdgeFunction(std::move(bp), std::move(values), std::move(segs));
}

EdgeFunction EdgeRestriction(const PiecewiseAffineUtility& u, int l, int k) {
  const int n = u.num_states();
  if (l == k || l < 0 || k < 0 || l >= n || k >= n) {
    Fail(ErrorCode::kPreconditionFailed, "edge needs two distinct states");
  }
  std::vector<Rational> bp = GuardRootsOnEdge(u, l, k);
  std::vector<Rational> values;
  std::vector<EdgeFunction::Segment> segs;
  for (std::size_t j = 0; j < bp.size(); ++j) {
    values.push_back(u.Eval(EdgePoint(n, l, k, bp[j])));
    if (j + 1 < bp.size()) {
      // Guard truth values are constant between consecutive roots.
      Belief mid = EdgePoint(n, l, k, (bp[j] + bp[j + 1]) / 2);
      auto p = u.MatchingPiece(mid.probs());
      if (!p) {
        Fail(ErrorCode::kNoPieceMatches, "no piece covers " + mid.ToString());
      }
      auto [c0, c1] = u.pieces()[*p].form.OnEdge(l, k);
      segs.push_back({c0, c1});
    }
  }
  return EdgeFunction(std::move(bp), std::move(values), std::move(segs));
}

Rational EdgeDerivativeAtVertex(const PiecewiseAffineUtility& u, int l, int k,
                                EdgeEnd end) {
  EdgeFunction f = EdgeRestriction(u, l, k);
  return end == EdgeEnd::kAtL ? f.segments().front().slope
                              : f.segments().back().slope;
}

ZeroSumReport CheckZeroSum(const GamePayoffs& g, int samples,
                           std::uint64_t seed) {
  ZeroSumReport report;
  const int n = g.num_states();
  for (int l = 0; l < n && report.ok(); ++l) {
    for (int k = l + 1; k < n && report.ok(); ++k) {
      EdgeFunction total = EdgeFunction::Zero();
      for (const PiecewiseAffineUtility& u : g.utilities) {
        total = total + EdgeRestriction(u, l, k);
      }
      if (auto t = total.FirstNonzero()) {
        report.exact_on_edges = false;
        report.witness = EdgePoint(n, l, k, *t);
      }
    }
  }
  if (!report.ok()) return report;
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    Belief b = Belief::Unchecked(RandomInteriorPoint(n, rng));
    Rational total = 0;
    for (const PiecewiseAffineUtility& u : g.utilities) total += u.Eval(b);
    if (total != 0) {
      report.witness = b;
      break;
    }
  }
  return report;
}

Rational ExpectedUtility(const PiecewiseAffineUtility& u,
                         const Experiment& posterior_law) {
  Rational total = 0;
  for (const Atom& a : posterior_law.atoms()) total += a.mass * u.Eval(a.belief);
  return total;
}

Rational ExpectedUtility(const GamePayoffs& g, const StrategyProfile& profile,
                         int sender) {
  return ExpectedUtility(g.utilities.at(sender), Product(profile));
}

Rational ConditionalPayoffAgainst(const PiecewiseAffineUtility& u,
                                  const Experiment& other, const Belief& x) {
  Rational total = 0;
  for (const ConditionalAtom& y : ConditionalDist(other, x)) {
    total += y.probability * u.Eval(Combine(other.prior(), x, y.belief));
  }
  return total;
}

Rational ConditionalPayoff(const GamePayoffs& g, const StrategyProfile& profile,
                           int sender, const Belief& x) {
  Experiment others = Product(profile.prior(), profile.Others(sender));
  return ConditionalPayoffAgainst(g.utilities.at(sender), others, x);
}

}  // namespace persuasion
