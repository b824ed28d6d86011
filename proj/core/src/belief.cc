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

#include "persuasion/belief.h"

#include <algorithm>
#include <sstream>

#include "persuasion/errors.h"

namespace persuasion {

StateSet::StateSet(std::vector<int> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (members_.empty()) Fail(ErrorCode::kMalformedInput, "empty state set");
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    Fail(ErrorCode::kMalformedInput, "duplicate state in set");
  }
  if (members_.front() < 0) {
    Fail(ErrorCode::kMalformedInput, "negative state index");
  }
}

StateSet StateSet::All(int num_states) {
  std::vector<int> m(num_states);
  for (int l = 0; l < num_states; ++l) m[l] = l;
  return StateSet(std::move(m));
}

StateSet StateSet::Pair(int l, int k) { return StateSet({l, k}); }

bool StateSet::Contains(int state) const {
  return std::binary_search(members_.begin(), members_.end(), state);
}

bool StateSet::IsSubsetOf(const StateSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

std::string StateSet::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members_[i] + 1);
  }
  return out + "}";
}

Belief::Belief(std::vector<Rational> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) Fail(ErrorCode::kMalformedInput, "empty belief");
  Rational total = 0;
  for (const Rational& p : probs_) {
    if (p < 0) Fail(ErrorCode::kMalformedInput, "negative probability");
    total += p;
  }
  if (total != 1) {
    Fail(ErrorCode::kMalformedInput,
         "belief sums to " + persuasion::ToString(total) + ", not 1");
  }
}

Belief Belief::Unchecked(std::vector<Rational> probs) {
  Belief b;
  b.probs_ = std::move(probs);
  return b;
}

Belief Belief::Normalized(std::vector<Rational> weights) {
  Rational total = 0;
  for (const Rational& w : weights) total += w;
  if (total <= 0) Fail(ErrorCode::kMalformedInput, "weights sum to zero");
  for (Rational& w : weights) w /= total;
  return Unchecked(std::move(weights));
}

Belief Belief::Vertex(int num_states, int state) {
  std::vector<Rational> p(num_states, Rational(0));
  p.at(state) = 1;
  return Unchecked(std::move(p));
}

Belief Belief::Uniform(int num_states) {
  return Unchecked(std::vector<Rational>(num_states, Frac(1, num_states)));
}

StateSet Belief::Support() const {
  std::vector<int> s;
  for (int l = 0; l < num_states(); ++l) {
    if (probs_[l] > 0) s.push_back(l);
  }
  return StateSet(std::move(s));
}

bool Belief::HasFullSupport() const {
  return std::all_of(probs_.begin(), probs_.end(),
                     [](const Rational& p) { return p > 0; });
}

bool Belief::IsDegenerate() const {
  return std::any_of(probs_.begin(), probs_.end(),
                     [](const Rational& p) { return p == 1; });
}

bool Belief::LiesOn(const StateSet& omega) const {
  for (int l = 0; l < num_states(); ++l) {
    if (probs_[l] > 0 && !omega.Contains(l)) return false;
  }
  return true;
}

std::string Belief::ToString() const {
  std::string out = "(";
  for (int l = 0; l < num_states(); ++l) {
    if (l) out += ",";
    out += persuasion::ToString(probs_[l]);
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Belief& b) {
  return os << b.ToString();
}

Belief Mix(const Belief& a, const Belief& b, const Rational& t) {
  std::vector<Rational> p(a.num_states());
  Rational s = 1 - t;
  for (int l = 0; l < a.num_states(); ++l) p[l] = s * a[l] + t * b[l];
  return Belief::Unchecked(std::move(p));
}

Belief EdgePoint(int num_states, int l, int k, const Rational& t) {
  std::vector<Rational> p(num_states, Rational(0));
  p[l] = 1 - t;
  p[k] += t;
  return Belief::Unchecked(std::move(p));
}

std::vector<Belief> SimplexGrid(int num_states, int resolution) {
  if (num_states < 1 || resolution < 1) {
    Fail(ErrorCode::kMalformedInput, "grid needs positive sizes");
  }
  std::vector<Belief> out;
  std::vector<int> counts(num_states, 0);
  // Enumerate compositions of `resolution` into num_states parts.
  auto recurse = [&](auto&& self, int pos, int left) -> void {
    if (pos == num_states - 1) {
      counts[pos] = left;
      std::vector<Rational> p(num_states);
      for (int l = 0; l < num_states; ++l) p[l] = Frac(counts[l], resolution);
      out.push_back(Belief::Unchecked(std::move(p)));
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[pos] = c;
      self(self, pos + 1, left - c);
    }
  };
  recurse(recurse, 0, resolution);
  return out;
}

Belief Combine(const Belief& prior, const std::vector<Belief>& interim) {
  const int n = prior.num_states();
  if (!prior.HasFullSupport()) {
    Fail(ErrorCode::kPreconditionFailed, "prior lacks full support");
  }
  if (interim.empty()) return prior;
  for (const Belief& x : interim) {
    if (x.num_states() != n) {
      Fail(ErrorCode::kMalformedInput, "belief dimension mismatch");
    }
  }
  std::vector<Rational> w(n);
  Rational total = 0;
  const int extra = static_cast<int>(interim.size()) - 1;
  for (int l = 0; l < n; ++l) {
    Rational v = 1;
    for (const Belief& x : interim) {
      v *= x[l];
      if (v == 0) break;
    }
    if (v != 0) {
      for (int i = 0; i < extra; ++i) v /= prior[l];
    }
    total += v;
    w[l] = std::move(v);
  }
  if (total == 0) {
    Fail(ErrorCode::kUndefinedPosterior,
         "interim beliefs have disjoint supports");
  }
  for (Rational& v : w) v /= total;
  return Belief::Unchecked(std::move(w));
}

Belief Combine(const Belief& prior, const Belief& x, const Belief& y) {
  return Combine(prior, std::vector<Belief>{x, y});
}

RatioRep RatioRepOf(const Belief& b, const StateSet& omega) {
  if (!b.LiesOn(omega)) {
    Fail(ErrorCode::kNotOnSubsimplex,
         b.ToString() + " is not supported on " + omega.ToString());
  }
  RatioRep r{omega, {}};
  Rational remaining = 1;
  for (int i = 0; i + 1 < omega.size(); ++i) {
    const Rational& g = b[omega[i]];
    remaining -= g;
    if (remaining == 0) {
      r.ratios.push_back(g > 0 ? ExtendedRational::Infinity()
                               : ExtendedRational(Rational(0)));
    } else {
      r.ratios.push_back(ExtendedRational(Rational(g / remaining)));
    }
  }
  return r;
}

Belief BeliefFromRatioRep(const RatioRep& r, int num_states) {
  const StateSet& omega = r.omega;
  if (static_cast<int>(r.ratios.size()) != omega.size() - 1) {
    Fail(ErrorCode::kMalformedInput, "ratio count does not match state set");
  }
  if (omega.members().back() >= num_states) {
    Fail(ErrorCode::kMalformedInput, "state index out of range");
  }
  std::vector<Rational> p(num_states, Rational(0));
  Rational remaining = 1;
  for (int i = 0; i + 1 < omega.size(); ++i) {
    const ExtendedRational& rk = r.ratios[i];
    if (rk.is_infinite()) {
      p[omega[i]] = remaining;
      remaining = 0;
    } else {
      Rational scale = 1 + rk.value();
      p[omega[i]] = remaining * rk.value() / scale;
      remaining /= scale;
    }
  }
  p[omega.members().back()] = remaining;
  return Belief::Unchecked(std::move(p));
}

}  // namespace persuasion
