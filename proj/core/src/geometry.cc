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

#include "persuasion/geometry.h"

#include <algorithm>
#include <set>

#include "persuasion/errors.h"

namespace persuasion {

bool HalfSpace::Holds(const std::vector<Rational>& b) const {
  Rational v = constant;
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    if (coeffs[l] != 0 && b[l] != 0) v += coeffs[l] * b[l];
  }
  return strict ? v > 0 : v >= 0;
}

HalfSpace ToHalfSpace(const Inequality& q) {
  switch (q.op) {
    case Relation::kGreater:
      return {q.lhs.coeffs, q.lhs.constant, true};
    case Relation::kGreaterEqual:
      return {q.lhs.coeffs, q.lhs.constant, false};
    case Relation::kLess: {
      AffineForm f = -q.lhs;
      return {f.coeffs, f.constant, true};
    }
    case Relation::kLessEqual: {
      AffineForm f = -q.lhs;
      return {f.coeffs, f.constant, false};
    }
  }
  return {};
}

std::vector<HalfSpace> EqualityConstraint(const AffineForm& f) {
  AffineForm g = -f;
  return {{f.coeffs, f.constant, false}, {g.coeffs, g.constant, false}};
}

HalfSpace PositiveConstraint(const AffineForm& f) {
  return {f.coeffs, f.constant, true};
}

bool Region::Contains(const Belief& b) const {
  if (!b.LiesOn(face)) return false;
  for (const HalfSpace& h : constraints) {
    if (!h.Holds(b.probs())) return false;
  }
  return true;
}

Region Region::With(const std::vector<HalfSpace>& more) const {
  Region out = *this;
  out.constraints.insert(out.constraints.end(), more.begin(), more.end());
  return out;
}

Region RegionFromCell(const StateSet& face, const Cell& cell) {
  Region r{face, {}};
  for (const Inequality& q : cell.constraints) {
    r.constraints.push_back(ToHalfSpace(q));
  }
  return r;
}

namespace {

struct Row {
  std::vector<Rational> a;  // coefficients on the face coordinates
  Rational c;               // a . x + c >= 0
  friend bool operator<(const Row& x, const Row& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.c < y.c;
  }
  friend bool operator==(const Row& x, const Row& y) {
    return x.a == y.a && x.c == y.c;
  }
};

// Scales a row so its first nonzero coefficient has absolute value one.
void ScaleRow(Row& r) {
  for (const Rational& v : r.a) {
    if (v != 0) {
      Rational s = abs(v);
      for (Rational& w : r.a) w /= s;
      r.c /= s;
      return;
    }
  }
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Exact in 128 bits at the sizes accepted here.
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > limit) return limit + 1;
  }
  return static_cast<std::uint64_t>(r);
}

// Solves the square system m * x = rhs exactly; false when singular.
bool Solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs,
           std::vector<Rational>& x) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(m[pivot], m[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return true;
}

}  // namespace

std::optional<RegionGeometry> AnalyzeRegion(int num_states,
                                            const Region& region,
                                            std::uint64_t budget) {
  const std::vector<int>& face = region.face.members();
  const int k = static_cast<int>(face.size());
  RegionGeometry out;
  std::set<Row> unique_rows;
  for (const HalfSpace& h : region.constraints) {
    Row r{std::vector<Rational>(k), h.constant};
    bool constant_only = true;
    for (int j = 0; j < k; ++j) {
      r.a[j] = h.coeffs[face[j]];
      if (r.a[j] != 0) constant_only = false;
    }
    if (constant_only) {
      // b . coeffs vanishes on the face; only the constant matters.
      bool ok = h.strict ? h.constant > 0 : h.constant >= 0;
      if (!ok) return out;
      continue;
    }
    ScaleRow(r);
    unique_rows.insert(std::move(r));
  }
  std::vector<Row> rows(unique_rows.begin(), unique_rows.end());
  for (int j = 0; j < k; ++j) {
    Row r{std::vector<Rational>(k, Rational(0)), Rational(0)};
    r.a[j] = 1;
    if (!unique_rows.count(r)) rows.push_back(std::move(r));
  }
  const int total = static_cast<int>(rows.size());
  const int pick = k - 1;
  if (Binomial(total, pick, budget) > budget) return std::nullopt;

  std::set<std::vector<Rational>> vertices;
  std::vector<int> idx(pick);
  for (int i = 0; i < pick; ++i) idx[i] = i;
  std::vector<Rational> x;
  while (true) {
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> rhs;
    m.push_back(std::vector<Rational>(k, Rational(1)));
    rhs.push_back(1);
    for (int i : idx) {
      m.push_back(rows[i].a);
      rhs.push_back(-rows[i].c);
    }
    if (Solve(std::move(m), std::move(rhs), x)) {
      bool feasible = true;
      for (const Row& r : rows) {
        Rational v = r.c;
        for (int j = 0; j < k; ++j) v += r.a[j] * x[j];
        if (v < 0) {
          feasible = false;
          break;
        }
      }
      if (feasible) vertices.insert(x);
    }
    // Next combination in lexicographic order.
    int i = pick - 1;
    while (i >= 0 && idx[i] == total - pick + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (vertices.empty()) return out;

  std::vector<Rational> centroid(num_states, Rational(0));
  for (const auto& v : vertices) {
    std::vector<Rational> full(num_states, Rational(0));
    for (int j = 0; j < k; ++j) {
      full[face[j]] = v[j];
      centroid[face[j]] += v[j];
    }
    out.closure_vertices.push_back(Belief::Unchecked(std::move(full)));
  }
  for (Rational& c : centroid) c /= static_cast<long>(vertices.size());
  out.interior = Belief::Unchecked(std::move(centroid));
  out.nonempty = region.Contains(out.interior);
  return out;
}

}  // namespace persuasion
