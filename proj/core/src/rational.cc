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

#include "persuasion/rational.h"

#include <cctype>

#include "persuasion/errors.h"

namespace persuasion {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void BadNumber(std::string_view text) {
  Fail(ErrorCode::kMalformedInput,
       "not a rational number: \"" + std::string(text) + "\"");
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational out;
  auto slash = body.find('/');
  auto dot = body.find('.');
  if (slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) BadNumber(text);
    mpz_class d{std::string(den)};
    if (d == 0) BadNumber(text);
    out = Rational(mpz_class(std::string(num)), d);
  } else if (dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) BadNumber(text);
    if (!whole.empty() && !AllDigits(whole)) BadNumber(text);
    if (!frac.empty() && !AllDigits(frac)) BadNumber(text);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole));
    mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac));
    out = Rational(w * scale + f, scale);
  } else {
    if (!AllDigits(body)) BadNumber(text);
    out = Rational(mpz_class(std::string(body)));
  }
  out.canonicalize();
  return negative ? Rational(-out) : out;
}

std::string ToString(const Rational& q) { return q.get_str(); }

const Rational& ExtendedRational::value() const {
  if (infinite_) {
    Fail(ErrorCode::kPreconditionFailed, "value() of an infinite ratio");
  }
  return value_;
}

std::string ExtendedRational::ToString() const {
  return infinite_ ? std::string("inf") : persuasion::ToString(value_);
}

ExtendedRational ExtendedRational::Parse(std::string_view text) {
  if (text == "inf" || text == "Infinity") return Infinity();
  Rational v = ParseRational(text);
  if (v < 0) Fail(ErrorCode::kMalformedInput, "negative ratio");
  return ExtendedRational(v);
}

std::ostream& operator<<(std::ostream& os, const ExtendedRational& r) {
  return os << r.ToString();
}

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
    case ErrorCode::kPriorMismatch: return "PriorMismatch";
    case ErrorCode::kUndefinedPosterior: return "UndefinedPosterior";
    case ErrorCode::kNotOnSubsimplex: return "NotOnSubsimplex";
    case ErrorCode::kNoPieceMatches: return "NoPieceMatches";
    case ErrorCode::kNotNormalized: return "NotNormalized";
    case ErrorCode::kNotPoolable: return "NotPoolable";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kZeroProbabilityEvent: return "ZeroProbabilityEvent";
    case ErrorCode::kSearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::kProductTooLarge: return "ProductTooLarge";
  }
  return "Unknown";
}

int ExitStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedInput:
    case ErrorCode::kInvariantViolation:
    case ErrorCode::kPriorMismatch:
      return 1;
    case ErrorCode::kSearchBudgetExceeded:
    case ErrorCode::kEnumerationTooLarge:
    case ErrorCode::kProductTooLarge:
      return 3;
    default:
      return 2;
  }
}

void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace persuasion
