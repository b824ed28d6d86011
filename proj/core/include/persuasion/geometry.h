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

// Exact polytope work on faces of the simplex. A region is a face Delta(S)
// cut by finitely many affine inequalities, some strict. Its closure is a
// polytope whose vertices are found by brute force over active sets; a
// region is nonempty exactly when the vertex centroid satisfies every
// inequality, strict ones included.

#ifndef PERSUASION_GEOMETRY_H_
#define PERSUASION_GEOMETRY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "persuasion/belief.h"
#include "persuasion/rational.h"
#include "persuasion/utility.h"

namespace persuasion {

// constant + coeffs . b  > 0 when strict, >= 0 otherwise.
struct HalfSpace {
  std::vector<Rational> coeffs;
  Rational constant = 0;
  bool strict = false;

  bool Holds(const std::vector<Rational>& b) const;
};

HalfSpace ToHalfSpace(const Inequality& q);
// The pair {f >= 0, -f >= 0}.
std::vector<HalfSpace> EqualityConstraint(const AffineForm& f);
// f > 0.
HalfSpace PositiveConstraint(const AffineForm& f);

struct Region {
  StateSet face;
  std::vector<HalfSpace> constraints;

  bool Contains(const Belief& b) const;
  Region With(const std::vector<HalfSpace>& more) const;
};
Region RegionFromCell(const StateSet& face, const Cell& cell);

struct RegionGeometry {
  bool nonempty = false;
  std::vector<Belief> closure_vertices;
  Belief interior;  // vertex centroid; inside the region when nonempty
};

inline constexpr std::uint64_t kDefaultVertexBudget = 3000000;

// nullopt when the active-set count exceeds the budget.
std::optional<RegionGeometry> AnalyzeRegion(
    int num_states, const Region& region,
    std::uint64_t budget = kDefaultVertexBudget);

}  // namespace persuasion

#endif  // PERSUASION_GEOMETRY_H_
