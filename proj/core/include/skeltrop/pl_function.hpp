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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skeltrop/rational.hpp"
#include "skeltrop/skeleton.hpp"

namespace skeltrop {

/// A piecewise linear function on a weak tropical complex, given by its
/// values at vertices and its integer slopes along horizontal rays.
struct PLFunction {
  std::map<std::string, Rat> vertex_values;
  /// label -> slope along the ray with that label.
  std::map<std::string, long> ray_slopes;
  /// Optional per-cell copies; they must agree with ray_slopes.
  std::map<std::string, std::map<std::string, long>> cell_ray_slopes;
  /// Optional refinement of a cell: extra chart points with their values.
  /// Such cells are rejected by the slope calculus.
  std::map<std::string, std::vector<std::pair<RatVector, Rat>>> subdivisions;
  /// Free-form provenance notes carried into reports.
  std::vector<std::string> notes;

  std::optional<Rat> value(const std::string& vertex) const;
  /// Slope of the ray `label` inside `cell`, honoring per-cell entries.
  std::optional<long> slope(const std::string& cell, const std::string& label) const;

  PLFunction plus_constant(const Rat& c) const;
  friend PLFunction operator+(const PLFunction& a, const PLFunction& b);
};

struct CodimOneDivisor {
  std::map<std::string, Rat> coefficients;
  Rat at(const std::string& cell) const;
  bool is_zero() const;
};

/// Continuity and integrality problems of F on C, one message per problem.
std::vector<std::string> check_pl_function(const WeakTropicalComplex& c, const PLFunction& f);

/// Function with F(u) = vertical_ord(u) and ray slopes horizontal_ord(H).
/// Throws kIntegralityViolation, or kMissingData when a vertex has no value.
PLFunction from_multiplicities(const WeakTropicalComplex& c, const std::map<std::string, Rat>& vertical_ord,
                               const std::map<std::string, long>& horizontal_ord);

/// Slope of F at the codimension-one cell t along the top-dimensional cell s.
Rat slope(const WeakTropicalComplex& c, const PLFunction& f, const std::string& t, const std::string& s);

Rat div_coefficient(const WeakTropicalComplex& c, const PLFunction& f, const std::string& t);
Rat hatdiv_coefficient(const WeakTropicalComplex& c, const PLFunction& f, const std::string& t);

CodimOneDivisor divisor(const WeakTropicalComplex& c, const PLFunction& f);
CodimOneDivisor hat_divisor(const WeakTropicalComplex& c, const PLFunction& f);

/// Sum of the ray slopes over unbounded extensions of each bounded
/// codimension-one cell; zero on unbounded cells.
CodimOneDivisor retraction_divisor(const WeakTropicalComplex& c, const PLFunction& f);

/// (top-dimensional unbounded cell, ray label) -> ray slope, or nullopt
/// where F carries no slope for the label.
std::map<std::pair<std::string, std::string>, std::optional<long>> boundary_divisor(const WeakTropicalComplex& c,
                                                                                    const PLFunction& f);

enum class CheckStatus { kOk, kViolation, kSkipped };
std::string to_string(CheckStatus s);

struct BalanceEntry {
  std::string cell;
  CheckStatus status = CheckStatus::kOk;
  Rat value;  // the coefficient that should vanish
  std::string message;
};

struct BalanceReport {
  std::vector<BalanceEntry> entries;
  bool ok() const;
  std::size_t count(CheckStatus s) const;
};

/// Every codimension-one cell with a nonzero hat-div coefficient is a violation.
BalanceReport check_pair_formula(const WeakTropicalComplex& c, const PLFunction& f);

/// Checks div(F) + tau = 0 on bounded codimension-one cells, with tau the
/// retraction divisor of F unless supplied.
BalanceReport check_bounded_formula(const WeakTropicalComplex& c, const PLFunction& f,
                                    const CodimOneDivisor* tau = nullptr);

}  // namespace skeltrop
