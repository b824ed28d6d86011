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

#ifndef PERSUASION_RATIONAL_H_
#define PERSUASION_RATIONAL_H_

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace persuasion {

// Arbitrary precision rational. gmpxx keeps every result in lowest terms.
using Rational = mpq_class;

// num / den in lowest terms. The two-argument gmpxx constructor does not
// reduce, so all code builds fractions through this helper.
inline Rational Frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p/q", "p" and finite decimals such as "-0.25".
// Throws Error(kMalformedInput) on anything else.
Rational ParseRational(std::string_view text);

// Canonical text form: "p/q" in lowest terms, or "p" for integers.
std::string ToString(const Rational& q);

inline int Sign(const Rational& q) { return sgn(q); }

// A nonnegative rational or the symbol Infinity.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  explicit ExtendedRational(Rational value) : value_(std::move(value)) {}
  static ExtendedRational Infinity() {
    ExtendedRational r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  // Precondition: !is_infinite().
  const Rational& value() const;

  std::string ToString() const;
  static ExtendedRational Parse(std::string_view text);

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }

 private:
  bool infinite_ = false;
  Rational value_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r);

}  // namespace persuasion

#endif  // PERSUASION_RATIONAL_H_
