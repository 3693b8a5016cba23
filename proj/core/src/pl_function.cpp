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

#include "skeltrop/pl_function.hpp"

#include <set>

namespace skeltrop {
namespace {

Rat require_value(const PLFunction& f, const std::string& v) {
  auto x = f.value(v);
  if (!x) throw Error(ErrorCode::kMissingData, "no function value at vertex " + v);
  return *x;
}

long require_slope(const PLFunction& f, const std::string& cell, const std::string& label) {
  auto x = f.slope(cell, label);
  if (!x) throw Error(ErrorCode::kMissingData, "no slope for ray " + label + " in cell " + cell);
  return *x;
}

void reject_subdivided(const PLFunction& f, const std::string& cell) {
  auto it = f.subdivisions.find(cell);
  if (it != f.subdivisions.end() && !it->second.empty())
    throw Error(ErrorCode::kSubdividedInput, "function is subdivided on cell " + cell);
}

}  // namespace

std::optional<Rat> PLFunction::value(const std::string& vertex) const {
  auto it = vertex_values.find(vertex);
  if (it == vertex_values.end()) return std::nullopt;
  return it->second;
}

std::optional<long> PLFunction::slope(const std::string& cell, const std::string& label) const {
  auto ct = cell_ray_slopes.find(cell);
  if (ct != cell_ray_slopes.end()) {
    auto jt = ct->second.find(label);
    if (jt != ct->second.end()) return jt->second;
  }
  auto it = ray_slopes.find(label);
  if (it == ray_slopes.end()) return std::nullopt;
  return it->second;
}

PLFunction PLFunction::plus_constant(const Rat& c) const {
  PLFunction out = *this;
  for (auto& [v, x] : out.vertex_values) x += c;
  for (auto& [cell, pts] : out.subdivisions)
    for (auto& [p, x] : pts) x += c;
  return out;
}

PLFunction operator+(const PLFunction& a, const PLFunction& b) {
  PLFunction out;
  for (const auto& [v, x] : a.vertex_values)
    if (auto y = b.value(v)) out.vertex_values[v] = x + *y;
  for (const auto& [l, s] : a.ray_slopes) {
    auto it = b.ray_slopes.find(l);
    if (it != b.ray_slopes.end()) out.ray_slopes[l] = s + it->second;
  }
  return out;
}

Rat CodimOneDivisor::at(const std::string& cell) const {
  auto it = coefficients.find(cell);
  return it == coefficients.end() ? Rat(0) : it->second;
}

bool CodimOneDivisor::is_zero() const {
  for (const auto& [id, x] : coefficients)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<std::string> check_pl_function(const WeakTropicalComplex& c, const PLFunction& f) {
  std::vector<std::string> problems;
  const auto labels = c.labels();
  for (const auto& [cell, row] : f.cell_ray_slopes) {
    if (!c.has_cell(cell)) {
      problems.push_back("slopes given for unknown cell " + cell);
      continue;
    }
    for (const auto& [label, s] : row) {
      if (!c.cell(cell).has_ray(label)) problems.push_back("cell " + cell + " has no ray " + label);
      auto it = f.ray_slopes.find(label);
      if (it != f.ray_slopes.end() && it->second != s)
        problems.push_back("slope of ray " + label + " in cell " + cell + " is " + std::to_string(s) +
                           " but " + std::to_string(it->second) + " elsewhere");
    }
  }
  // Per-cell entries without a global value must still agree with each other.
  std::map<std::string, std::set<long>> seen;
  for (const auto& [cell, row] : f.cell_ray_slopes)
    for (const auto& [label, s] : row) seen[label].insert(s);
  for (const auto& [label, vals] : seen)
    if (vals.size() > 1) problems.push_back("ray " + label + " carries different slopes in different cells");
  for (const auto& [cell, pts] : f.subdivisions)
    if (!c.has_cell(cell)) problems.push_back("subdivision given for unknown cell " + cell);

  for (const auto& cell : c.cells()) {
    if (cell.r() < 1) continue;
    const auto& vs = cell.vertex_ids();
    for (std::size_t i = 1; i < vs.size(); ++i) {
      auto a = f.value(vs[0]);
      auto b = f.value(vs[i]);
      if (!a || !b) continue;
      const Rat q = (*b - *a) / cell.length();
      if (!q.is_integer())
        problems.push_back("values at " + vs[0] + " and " + vs[i] + " differ by " + (*b - *a).str() +
                           ", not a multiple of the length " + cell.length().str() + " of cell " + cell.id());
    }
  }
  return problems;
}

PLFunction from_multiplicities(const WeakTropicalComplex& c, const std::map<std::string, Rat>& vertical_ord,
                               const std::map<std::string, long>& horizontal_ord) {
  PLFunction f;
  for (const auto& v : c.vertices()) {
    auto it = vertical_ord.find(v);
    if (it == vertical_ord.end()) throw Error(ErrorCode::kMissingData, "no multiplicity for vertex " + v);
    f.vertex_values[v] = it->second;
  }
  f.ray_slopes = horizontal_ord;
  const auto problems = check_pl_function(c, f);
  if (!problems.empty()) throw Error(ErrorCode::kIntegralityViolation, problems.front());
  return f;
}

Rat slope(const WeakTropicalComplex& c, const PLFunction& f, const std::string& t, const std::string& s) {
  const Extension ext = extension_direction(c, t, s);
  if (c.cell(s).dim() != c.dimension())
    throw Error(ErrorCode::kNotAFace, s + " is not a top-dimensional cell");
  reject_subdivided(f, t);
  reject_subdivided(f, s);
  const CanonicalCell& ct = c.cell(t);
  if (ext.bounded) {
    const long db = deg_b(c, t);
    if (db == 0) throw Error(ErrorCode::kDivisionByZeroDegree, "deg_b(" + t + ") = 0");
    Rat weighted = 0;
    for (const auto& u : ct.vertex_ids()) {
      std::optional<long> a = c.alpha(t, u);
      if (!a && ct.r() == 0) a = db;
      if (!a) throw Error(ErrorCode::kMissingData, "no alpha number for vertex " + u + " on cell " + t);
      weighted += Rat(*a) * require_value(f, u);
    }
    return (require_value(f, ext.id) - weighted / Rat(db)) / c.cell(s).length();
  }
  const long du = deg_u(c, t);
  if (du == 0) throw Error(ErrorCode::kDivisionByZeroDegree, "deg_u(" + t + ") = 0");
  Rat weighted = 0;
  for (const auto& r : ct.ray_labels()) {
    auto a = c.ray_alpha(t, r);
    if (!a) throw Error(ErrorCode::kMissingData, "no ray alpha number for " + r + " on cell " + t);
    weighted += Rat(*a) * Rat(require_slope(f, t, r));
  }
  return Rat(require_slope(f, s, ext.id)) - weighted / Rat(du);
}

Rat div_coefficient(const WeakTropicalComplex& c, const PLFunction& f, const std::string& t) {
  if (c.cell(t).dim() != c.dimension() - 1) throw Error(ErrorCode::kNotCodimOne, t + " is not of codimension one");
  if (!c.cell(t).bounded()) return 0;
  Rat sum = 0;
  for (const auto& s : c.cofaces(t, c.dimension()))
    if (extension_direction(c, t, s).bounded) sum += slope(c, f, t, s);
  return sum;
}

Rat hatdiv_coefficient(const WeakTropicalComplex& c, const PLFunction& f, const std::string& t) {
  if (c.cell(t).dim() != c.dimension() - 1) throw Error(ErrorCode::kNotCodimOne, t + " is not of codimension one");
  Rat sum = 0;
  for (const auto& s : c.cofaces(t, c.dimension())) sum += slope(c, f, t, s);
  return sum;
}

CodimOneDivisor divisor(const WeakTropicalComplex& c, const PLFunction& f) {
  CodimOneDivisor d;
  for (const auto& t : c.codim_one_cells()) d.coefficients[t] = div_coefficient(c, f, t);
  return d;
}

CodimOneDivisor hat_divisor(const WeakTropicalComplex& c, const PLFunction& f) {
  CodimOneDivisor d;
  for (const auto& t : c.codim_one_cells()) d.coefficients[t] = hatdiv_coefficient(c, f, t);
  return d;
}

CodimOneDivisor retraction_divisor(const WeakTropicalComplex& c, const PLFunction& f) {
  CodimOneDivisor d;
  for (const auto& t : c.codim_one_cells()) {
    Rat sum = 0;
    if (c.cell(t).bounded())
      for (const auto& s : c.cofaces(t, c.dimension())) {
        const Extension ext = extension_direction(c, t, s);
        if (!ext.bounded) sum += Rat(require_slope(f, s, ext.id));
      }
    d.coefficients[t] = sum;
  }
  return d;
}

std::map<std::pair<std::string, std::string>, std::optional<long>> boundary_divisor(const WeakTropicalComplex& c,
                                                                                    const PLFunction& f) {
  std::map<std::pair<std::string, std::string>, std::optional<long>> out;
  for (const auto& cell : c.cells()) {
    if (cell.dim() != c.dimension() || cell.bounded()) continue;
    for (const auto& l : cell.ray_labels()) out[{cell.id(), l}] = f.slope(cell.id(), l);
  }
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kOk: return "ok";
    case CheckStatus::kViolation: return "violation";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "unknown";
}

bool BalanceReport::ok() const { return count(CheckStatus::kViolation) == 0; }

std::size_t BalanceReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.status == s;
  return n;
}

namespace {

template <typename Fn>
BalanceEntry evaluate_entry(const std::string& cell, Fn&& fn) {
  BalanceEntry e;
  e.cell = cell;
  try {
    e.value = fn();
    e.status = e.value.is_zero() ? CheckStatus::kOk : CheckStatus::kViolation;
    if (!e.value.is_zero()) e.message = "coefficient " + e.value.str() + " should be 0";
  } catch (const Error& err) {
    if (err.code() != ErrorCode::kMissingData) throw;
    e.status = CheckStatus::kSkipped;
    e.message = err.what();
  }
  return e;
}

}  // namespace

BalanceReport check_pair_formula(const WeakTropicalComplex& c, const PLFunction& f) {
  BalanceReport r;
  for (const auto& t : c.codim_one_cells())
    r.entries.push_back(evaluate_entry(t, [&] { return hatdiv_coefficient(c, f, t); }));
  return r;
}

BalanceReport check_bounded_formula(const WeakTropicalComplex& c, const PLFunction& f, const CodimOneDivisor* tau) {
  BalanceReport r;
  for (const auto& t : c.codim_one_cells()) {
    if (!c.cell(t).bounded()) continue;
    r.entries.push_back(evaluate_entry(t, [&] {
      Rat tau_t;
      if (tau) {
        tau_t = tau->at(t);
      } else {
        tau_t = 0;
        for (const auto& s : c.cofaces(t, c.dimension())) {
          const Extension ext = extension_direction(c, t, s);
          if (!ext.bounded) tau_t += Rat(require_slope(f, s, ext.id));
        }
      }
      return div_coefficient(c, f, t) + tau_t;
    }));
  }
  return r;
}

}  // namespace skeltrop
