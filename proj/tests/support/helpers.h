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


#ifndef PERSUASION_TESTS_SUPPORT_HELPERS_H_
#define PERSUASION_TESTS_SUPPORT_HELPERS_H_

#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "persuasion/belief.h"
#include "persuasion/errors.h"
#include "persuasion/experiment.h"
#include "persuasion/rational.h"

namespace persuasion::testing {

inline Rational Q(const char* text) { return ParseRational(text); }

inline Belief B(std::initializer_list<const char*> probs) {
  std::vector<Rational> v;
  for (const char* p : probs) v.push_back(ParseRational(p));
  return Belief(std::move(v));
}

inline Experiment E(const Belief& prior,
                    std::initializer_list<std::pair<Belief, const char*>> atoms) {
  std::vector<Atom> out;
  for (const auto& [b, m] : atoms) out.push_back({b, ParseRational(m)});
  return Experiment(prior, std::move(out));
}

inline int RandInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Random belief supported exactly on omega, with small integer weights.
inline Belief RandomBeliefOn(const StateSet& omega, int num_states,
                             std::mt19937_64& rng) {
  std::vector<Rational> w(num_states, Rational(0));
  for (int l : omega) w[l] = RandInt(rng, 1, 7);
  return Belief::Normalized(std::move(w));
}

// Error code thrown by f, or nullopt when it returns normally.
template <typename F>
std::optional<ErrorCode> CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace persuasion::testing

#endif  // PERSUASION_TESTS_SUPPORT_HELPERS_H_
