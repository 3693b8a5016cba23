// Copyright 2026 The skeltrop Authors.
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

#include "skeltrop/rational.hpp"

#include <cctype>
#include <ostream>

#include "skeltrop/error.hpp"

namespace skeltrop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kNotASublattice: return "NotASublattice";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kEmptyPolyhedron: return "EmptyPolyhedron";
    case ErrorCode::kHasLineality: return "HasLineality";
    case ErrorCode::kNotCodimOne: return "NotCodimOne";
    case ErrorCode::kNotAFace: return "NotAFace";
    case ErrorCode::kMissingData: return "MissingData";
    case ErrorCode::kIntegralityViolation: return "IntegralityViolation";
    case ErrorCode::kDivisionByZeroDegree: return "DivisionByZeroDegree";
    case ErrorCode::kSubdividedInput: return "SubdividedInput";
    case ErrorCode::kGenericityViolated: return "GenericityViolated";
    case ErrorCode::kNotGammaRational: return "NotGammaRational";
    case ErrorCode::kInconsistentSpans: return "InconsistentSpans";
    case ErrorCode::kNonIntegralMultiplicity: return "NonIntegralMultiplicity";
    case ErrorCode::kNotVertexDetermined: return "NotVertexDetermined";
    case ErrorCode::kIrreducibleTriple: return "IrreducibleTriple";
    case ErrorCode::kNotAnEdge: return "NotAnEdge";
    case ErrorCode::kLiftInconsistency: return "LiftInconsistency";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kUnsupportedInstance: return "UnsupportedInstance";
  }
  return "Unknown";
}

Rat::Rat(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::kInvalidInput, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw Error(ErrorCode::kInvalidInput, "not an integer: '" + std::string(s) + "'");
  std::string text(s.front() == '+' ? s.substr(1) : s);
  return Integer(text, 10);
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::kInvalidInput, "empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw Error(ErrorCode::kInvalidInput, "bad denominator in '" + std::string(text) + "'");
    }
    return Rat(num, parse_integer(den_text));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (!frac.empty() && !all_digits(frac)) {
      throw Error(ErrorCode::kInvalidInput, "bad decimal '" + std::string(text) + "'");
    }
    const bool negative = !whole.empty() && whole.front() == '-';
    std::string_view whole_digits = whole;
    if (!whole_digits.empty() && (whole_digits.front() == '-' || whole_digits.front() == '+')) {
      whole_digits.remove_prefix(1);
    }
    if (whole_digits.empty() && frac.empty()) {
      throw Error(ErrorCode::kInvalidInput, "bad decimal '" + std::string(text) + "'");
    }
    const Integer int_part = whole_digits.empty() ? Integer(0) : parse_integer(whole_digits);
    Integer scale = 1;
    Integer frac_part = 0;
    if (!frac.empty()) {
      frac_part = parse_integer(frac);
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    }
    Rat value = Rat(int_part) + Rat(frac_part, scale);
    return negative ? -value : value;
  }
  return Rat(parse_integer(text));
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::kInvalidInput, "division by zero");
  q_ /= o.q_;
  return *this;
}

Integer Rat::floor() const { return floor_div(q_.get_num(), q_.get_den()); }

std::string Rat::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw Error(ErrorCode::kInvalidInput, "division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

RatVector to_rat(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s + ")";
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace skeltrop
