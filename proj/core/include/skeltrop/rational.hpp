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

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace skeltrop {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// This is the value group of the library: every constant of a polyhedron,
/// every length and every function value is a `Rat`.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : q_(value) {}   // NOLINT(google-explicit-constructor)
  Rat(const Integer& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(const Integer& num, const Integer& den);
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "p/q", "p" and finite decimals such as "-0.25".
  static Rat parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  Integer floor() const;

  /// "p/q" in lowest terms, or "p" when the denominator is 1.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-q_)); }
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

Rat abs(const Rat& x);
std::ostream& operator<<(std::ostream& os, const Rat& x);

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rat>;

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
/// Exact quotient a / b rounded toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);

RatVector to_rat(const IntVector& v);
std::string to_string(const RatVector& v);
std::string to_string(const IntVector& v);

}  // namespace skeltrop
