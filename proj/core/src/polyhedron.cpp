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

#include "skeltrop/polyhedron.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "combinatorics.hpp"

namespace skeltrop {
namespace {

RatMatrix normal_rows(const std::vector<const Constraint*>& rows, std::size_t n) {
  RatMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(rows[i]->u[j]);
  return m;
}

void check_shape(std::size_t n, const std::vector<Constraint>& cs) {
  for (const auto& c : cs)
    if (c.u.size() != n) throw Error(ErrorCode::kInvalidInput, "constraint normal has wrong dimension");
}

// Integer normal and rational constant proportional to the rational vector a = (u, gamma).
Constraint scale_to_constraint(const RatVector& a, std::size_t n) {
  RatVector u(a.begin(), a.begin() + n);
  bool zero = std::all_of(u.begin(), u.end(), [](const Rat& x) { return x.is_zero(); });
  if (zero) {
    Rat g = a[n].is_zero() ? Rat(0) : Rat(a[n].sign());
    return {IntVector(n, Integer(0)), g};
  }
  IntVector cleared = clear_denominators(u);
  IntVector prim = primitive_vector(cleared);
  // factor with prim = factor * u
  std::size_t j = 0;
  while (u[j].is_zero()) ++j;
  Rat factor = Rat(prim[j]) / u[j];
  return {prim, a[n] * factor};
}

}  // namespace

Rat Constraint::evaluate(const RatVector& x) const {
  Rat s = gamma;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) s += Rat(u[i]) * x[i];
  return s;
}

Rat Constraint::linear(const RatVector& d) const {
  Rat s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) s += Rat(u[i]) * d[i];
  return s;
}

Polyhedron::Polyhedron(std::size_t rank, std::vector<Constraint> ineqs, std::vector<Constraint> eqs)
    : rank_(rank), ineqs_(std::move(ineqs)), eqs_(std::move(eqs)) {
  check_shape(rank_, ineqs_);
  check_shape(rank_, eqs_);
  geo_ = compute(rank_, ineqs_, eqs_);
}

std::shared_ptr<const Polyhedron::Geometry> Polyhedron::compute(std::size_t n,
                                                                const std::vector<Constraint>& ineqs,
                                                                const std::vector<Constraint>& eqs) {
  auto geo = std::make_shared<Geometry>();

  std::vector<const Constraint*> all;
  for (const auto& c : ineqs) all.push_back(&c);
  for (const auto& c : eqs) all.push_back(&c);
  geo->lineality = kernel(normal_rows(all, n));

  // Work in the pointed part: add orthogonality to the lineality space.
  std::vector<Constraint> lin_eqs;
  for (const auto& l : geo->lineality) lin_eqs.push_back({primitive_vector(l), Rat(0)});
  std::vector<const Constraint*> eq_rows;
  for (const auto& c : eqs) eq_rows.push_back(&c);
  for (const auto& c : lin_eqs) eq_rows.push_back(&c);
  const std::size_t re = skeltrop::rank(normal_rows(eq_rows, n));
  const std::size_t k = n - re;
  const std::size_t m = ineqs.size();

  std::set<RatVector> seen;
  detail::for_each_subset(m, k, [&](const std::vector<std::size_t>& sub) {
    std::vector<const Constraint*> rows = eq_rows;
    for (auto i : sub) rows.push_back(&ineqs[i]);
    RatMatrix a = normal_rows(rows, n);
    RatVector b;
    for (auto* c : rows) b.push_back(-c->gamma);
    auto sol = solve_affine(a, b);
    if (!sol || !sol->kernel.empty()) return true;
    for (const auto& c : ineqs)
      if (c.evaluate(sol->point).sign() < 0) return true;
    if (seen.insert(sol->point).second) geo->vertices.push_back(sol->point);
    return true;
  });
  if (geo->vertices.empty()) {
    geo->lineality.clear();
    return geo;
  }
  geo->empty = false;

  if (k >= 1) {
    std::set<IntVector> seen_rays;
    detail::for_each_subset(m, k - 1, [&](const std::vector<std::size_t>& sub) {
      std::vector<const Constraint*> rows = eq_rows;
      for (auto i : sub) rows.push_back(&ineqs[i]);
      auto ker = kernel(normal_rows(rows, n));
      if (ker.size() != 1) return true;
      RatVector d = ker[0];
      bool pos = true, neg = true;
      for (const auto& c : ineqs) {
        int s = c.linear(d).sign();
        if (s < 0) pos = false;
        if (s > 0) neg = false;
      }
      if (!pos && !neg) return true;
      if (!pos)
        for (auto& x : d) x = -x;
      IntVector r = primitive_vector(d);
      if (seen_rays.insert(r).second) geo->rays.push_back(r);
      return true;
    });
  }

  for (std::size_t i = 0; i < m; ++i) {
    bool tight = true;
    for (const auto& v : geo->vertices)
      if (!ineqs[i].evaluate(v).is_zero()) { tight = false; break; }
    if (tight)
      for (const auto& r : geo->rays)
        if (!ineqs[i].linear(to_rat(r)).is_zero()) { tight = false; break; }
    if (tight) geo->implicit.push_back(i);
  }
  std::vector<const Constraint*> aff;
  for (const auto& c : eqs) aff.push_back(&c);
  for (auto i : geo->implicit) aff.push_back(&ineqs[i]);
  geo->dim = static_cast<int>(n - skeltrop::rank(normal_rows(aff, n)));
  return geo;
}

Polyhedron Polyhedron::empty(std::size_t rank) {
  return Polyhedron(rank, {Constraint{IntVector(rank, Integer(0)), Rat(-1)}});
}

Polyhedron Polyhedron::point(const RatVector& x) {
  std::vector<Constraint> eqs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    IntVector u(x.size(), Integer(0));
    u[i] = 1;
    eqs.push_back({u, -x[i]});
  }
  return Polyhedron(x.size(), {}, std::move(eqs));
}

Polyhedron Polyhedron::from_generators(std::size_t n, const std::vector<RatVector>& points,
                                       const std::vector<IntVector>& rays,
                                       const std::vector<IntVector>& lines) {
  if (points.empty()) return empty(n);
  // Homogenize: the cone over (p,1), (r,0), +-(l,0) in Q^{n+1}.
  std::vector<RatVector> gens;
  for (const auto& p : points) {
    if (p.size() != n) throw Error(ErrorCode::kInvalidInput, "generator has wrong dimension");
    RatVector g = p;
    g.push_back(Rat(1));
    gens.push_back(std::move(g));
  }
  auto add_dir = [&](const IntVector& r, bool both) {
    if (r.size() != n) throw Error(ErrorCode::kInvalidInput, "generator has wrong dimension");
    RatVector g = to_rat(r);
    g.push_back(Rat(0));
    if (std::all_of(g.begin(), g.end(), [](const Rat& x) { return x.is_zero(); })) return;
    gens.push_back(g);
    if (both) {
      for (auto& x : g) x = -x;
      gens.push_back(std::move(g));
    }
  };
  for (const auto& r : rays) add_dir(r, false);
  for (const auto& l : lines) add_dir(l, true);

  RatMatrix gm(gens.size(), n + 1);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j <= n; ++j) gm(i, j) = gens[i][j];
  const std::vector<RatVector> complement = kernel(gm);
  const std::size_t span_dim = n + 1 - complement.size();

  std::vector<Constraint> eqs;
  for (const auto& c : complement) eqs.push_back(scale_to_constraint(c, n));

  std::vector<Constraint> ineqs;
  std::set<std::pair<IntVector, Rat>> seen;
  detail::for_each_subset(gens.size(), span_dim - 1, [&](const std::vector<std::size_t>& sub) {
    RatMatrix m(sub.size() + complement.size(), n + 1);
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = 0; j <= n; ++j) m(i, j) = gens[sub[i]][j];
    for (std::size_t i = 0; i < complement.size(); ++i)
      for (std::size_t j = 0; j <= n; ++j) m(sub.size() + i, j) = complement[i][j];
    auto ker = kernel(m);
    if (ker.size() != 1) return true;
    RatVector a = ker[0];
    bool pos = true, neg = true;
    for (const auto& g : gens) {
      Rat s = 0;
      for (std::size_t j = 0; j <= n; ++j) s += a[j] * g[j];
      if (s.sign() < 0) pos = false;
      if (s.sign() > 0) neg = false;
    }
    if (!pos && !neg) return true;
    if (!pos)
      for (auto& x : a) x = -x;
    Constraint c = scale_to_constraint(a, n);
    if (std::all_of(c.u.begin(), c.u.end(), [](const Integer& x) { return x == 0; })) return true;
    if (seen.insert({c.u, c.gamma}).second) ineqs.push_back(std::move(c));
    return true;
  });
  return Polyhedron(n, std::move(ineqs), std::move(eqs));
}

VRep Polyhedron::vrep() const {
  if (is_empty()) throw Error(ErrorCode::kEmptyPolyhedron, "polyhedron is empty");
  if (has_lineality()) throw Error(ErrorCode::kHasLineality, "polyhedron contains a line");
  return {geo_->vertices, geo_->rays};
}

bool Polyhedron::contains(const RatVector& x) const {
  if (x.size() != rank_) throw Error(ErrorCode::kInvalidInput, "point has wrong dimension");
  for (const auto& c : eqs_)
    if (!c.evaluate(x).is_zero()) return false;
  for (const auto& c : ineqs_)
    if (c.evaluate(x).sign() < 0) return false;
  return true;
}

bool Polyhedron::contains(const Polyhedron& other) const {
  if (other.rank_ != rank_) throw Error(ErrorCode::kInvalidInput, "rank mismatch");
  if (other.is_empty()) return true;
  if (is_empty()) return false;
  for (const auto& v : other.geo_->vertices)
    if (!contains(v)) return false;
  for (const auto& r : other.geo_->rays) {
    RatVector d = to_rat(r);
    for (const auto& c : eqs_)
      if (!c.linear(d).is_zero()) return false;
    for (const auto& c : ineqs_)
      if (c.linear(d).sign() < 0) return false;
  }
  for (const auto& l : other.geo_->lineality) {
    for (const auto& c : eqs_)
      if (!c.linear(l).is_zero()) return false;
    for (const auto& c : ineqs_)
      if (!c.linear(l).is_zero()) return false;
  }
  return true;
}

bool Polyhedron::relint_contains(const RatVector& x) const {
  if (is_empty() || !contains(x)) return false;
  const auto& imp = geo_->implicit;
  for (std::size_t i = 0; i < ineqs_.size(); ++i) {
    const bool implicit = std::binary_search(imp.begin(), imp.end(), i);
    const int s = ineqs_[i].evaluate(x).sign();
    if (implicit ? s != 0 : s <= 0) return false;
  }
  return true;
}

RatVector Polyhedron::relint_point() const {
  if (is_empty()) throw Error(ErrorCode::kEmptyPolyhedron, "polyhedron is empty");
  RatVector p(rank_, Rat(0));
  for (const auto& v : geo_->vertices)
    for (std::size_t i = 0; i < rank_; ++i) p[i] += v[i];
  const Rat count(static_cast<long>(geo_->vertices.size()));
  for (auto& x : p) x /= count;
  for (const auto& r : geo_->rays)
    for (std::size_t i = 0; i < rank_; ++i) p[i] += Rat(r[i]);
  return p;
}

Polyhedron Polyhedron::with_tight(const std::vector<std::size_t>& tight) const {
  std::vector<Constraint> eqs = eqs_;
  for (auto i : tight) eqs.push_back(ineqs_.at(i));
  return Polyhedron(rank_, ineqs_, std::move(eqs));
}

Polyhedron Polyhedron::with_equalities(const std::vector<Constraint>& extra) const {
  std::vector<Constraint> eqs = eqs_;
  eqs.insert(eqs.end(), extra.begin(), extra.end());
  return Polyhedron(rank_, ineqs_, std::move(eqs));
}

std::vector<Polyhedron> Polyhedron::faces() const {
  if (is_empty()) return {};
  if (has_lineality()) throw Error(ErrorCode::kHasLineality, "faces of a polyhedron with lineality");
  std::vector<Polyhedron> out;
  std::set<std::vector<std::size_t>> seen;
  std::deque<std::vector<std::size_t>> queue;
  seen.insert(geo_->implicit);
  queue.push_back(geo_->implicit);
  out.push_back(with_tight(geo_->implicit));
  while (!queue.empty()) {
    const std::vector<std::size_t> closed = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < ineqs_.size(); ++i) {
      if (std::binary_search(closed.begin(), closed.end(), i)) continue;
      std::vector<std::size_t> t = closed;
      t.insert(std::upper_bound(t.begin(), t.end(), i), i);
      Polyhedron f = with_tight(t);
      if (f.is_empty()) continue;
      const auto& key = f.implicit_equalities();
      if (!seen.insert(key).second) continue;
      queue.push_back(key);
      out.push_back(with_tight(key));
    }
  }
  return out;
}

std::string Polyhedron::str() const {
  std::ostringstream os;
  auto term = [&](const Constraint& c, const char* rel) {
    os << to_string(c.u) << ".x + " << c.gamma << ' ' << rel << " 0";
  };
  os << "{";
  bool first = true;
  for (const auto& c : ineqs_) {
    if (!first) os << ", ";
    first = false;
    term(c, ">=");
  }
  for (const auto& c : eqs_) {
    if (!first) os << ", ";
    first = false;
    term(c, "==");
  }
  os << "} in Q^" << rank_;
  return os.str();
}

Polyhedron recession_cone(const Polyhedron& p) {
  if (p.is_empty()) throw Error(ErrorCode::kEmptyPolyhedron, "recession cone of empty polyhedron");
  std::vector<Constraint> ineqs, eqs;
  for (const auto& c : p.ineqs()) ineqs.push_back({c.u, Rat(0)});
  for (const auto& c : p.eqs()) eqs.push_back({c.u, Rat(0)});
  return Polyhedron(p.rank(), std::move(ineqs), std::move(eqs));
}

Lattice direction_lattice(const Polyhedron& p) {
  if (p.is_empty()) throw Error(ErrorCode::kEmptyPolyhedron, "direction lattice of empty polyhedron");
  const std::size_t n = p.rank();
  std::vector<const Constraint*> rows;
  for (const auto& c : p.eqs()) rows.push_back(&c);
  for (auto i : p.implicit_equalities()) rows.push_back(&p.ineqs()[i]);
  return saturated_span(n, kernel(normal_rows(rows, n)));
}

Polyhedron intersect(const Polyhedron& p, const Polyhedron& q) {
  if (p.rank() != q.rank()) throw Error(ErrorCode::kInvalidInput, "rank mismatch in intersection");
  std::vector<Constraint> ineqs = p.ineqs(), eqs = p.eqs();
  ineqs.insert(ineqs.end(), q.ineqs().begin(), q.ineqs().end());
  eqs.insert(eqs.end(), q.eqs().begin(), q.eqs().end());
  return Polyhedron(p.rank(), std::move(ineqs), std::move(eqs));
}

bool same_point_set(const Polyhedron& p, const Polyhedron& q) { return p.contains(q) && q.contains(p); }

}  // namespace skeltrop
